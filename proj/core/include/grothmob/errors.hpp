/*
   Copyright 2026 The grothmob Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef GROTHMOB_ERRORS_HPP
#define GROTHMOB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace grothmob {

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1; anything else is a usage error or a bug.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class MalformedPermutation : public Error {
public:
    using Error::Error;
};

class InvalidDegree : public Error {
public:
    using Error::Error;
};

class IndexError : public Error {
public:
    using Error::Error;
};

class ArityError : public Error {
public:
    using Error::Error;
};

class UndefinedDegree : public Error {
public:
    using Error::Error;
};

class RangeError : public Error {
public:
    using Error::Error;
};

class InfeasiblePoset : public Error {
public:
    using Error::Error;
};

class EmptySupport : public Error {
public:
    using Error::Error;
};

class TruncationDegreeError : public Error {
public:
    using Error::Error;
};

// Raised when a Schubert polynomial has a coefficient other than 1, so the
// Moebius formula is not applicable.
class HypothesisViolated : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace grothmob

#endif
