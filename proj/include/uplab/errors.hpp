// Copyright 2026 The uplab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UPLAB_ERRORS_HPP
#define UPLAB_ERRORS_HPP

#include <stdexcept>

namespace uplab {

// Caller violated an operation's precondition.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A computation exceeded a documented size cap and was refused.
class CapacityError : public std::length_error {
 public:
  using std::length_error::length_error;
};

// An internal invariant failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace uplab

#endif  // UPLAB_ERRORS_HPP
