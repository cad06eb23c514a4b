// Copyright 2026 The commcp Authors.
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

#ifndef COMMCP_ERROR_HPP_
#define COMMCP_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace commcp {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A caller passed arguments that violate a documented precondition.
class InvalidArgument : public Error {
 public:
  using Error::Error;
};

// Input data (files, matrices, labels) is malformed or inconsistent.
class DataError : public Error {
 public:
  using Error::Error;
};

// The requested configuration admits no valid solution, e.g. fewer than four
// communities for a core-periphery split.
class InfeasibleError : public Error {
 public:
  using Error::Error;
};

}  // namespace commcp

#endif  // COMMCP_ERROR_HPP_
