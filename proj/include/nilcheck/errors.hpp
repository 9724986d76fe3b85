/*
   Copyright 2026 The nilcheck Authors

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

#pragma once

#include <stdexcept>
#include <string>

namespace nilcheck {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

#define NILCHECK_ERROR(Name)                                   \
    class Name : public Error {                                \
      public:                                                  \
        explicit Name(const std::string& what) : Error(what) {} \
    }

NILCHECK_ERROR(NotInvertible);
NILCHECK_ERROR(ContextError);
NILCHECK_ERROR(UnsupportedContext);
NILCHECK_ERROR(IncompleteMap);
NILCHECK_ERROR(NotInSpan);
NILCHECK_ERROR(IndexError);
NILCHECK_ERROR(NotInvariant);
NILCHECK_ERROR(UnsupportedPrime);
NILCHECK_ERROR(RepresentationError);
NILCHECK_ERROR(DegreesMismatch);
NILCHECK_ERROR(Unsupported);
NILCHECK_ERROR(UnknownGroup);
NILCHECK_ERROR(VerificationFailure);
NILCHECK_ERROR(PresentationError);

#undef NILCHECK_ERROR

}  // namespace nilcheck
