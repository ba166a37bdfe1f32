/**************************************************************************
 * errors.hpp
 *
 * Copyright 2026 The ogc authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 **************************************************************************/

#pragma once

#include <stdexcept>
#include <string>

namespace ogc {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class NotPrime : public Error { public: using Error::Error; };
class TooLarge : public Error { public: using Error::Error; };
class NoIrreducibleFound : public Error { public: using Error::Error; };
class DivisionByZero : public Error { public: using Error::Error; };
class DimMismatch : public Error { public: using Error::Error; };
class RankDeficient : public Error { public: using Error::Error; };
class ZeroVector : public Error { public: using Error::Error; };
class BudgetExceeded : public Error { public: using Error::Error; };
class InvalidJ : public Error { public: using Error::Error; };
class TableMismatch : public Error { public: using Error::Error; };
class EvenCharacteristic : public Error { public: using Error::Error; };
class NotTruncated : public Error { public: using Error::Error; };
class NotHadamard : public Error { public: using Error::Error; };
class VerificationFailed : public Error { public: using Error::Error; };

} // namespace ogc
