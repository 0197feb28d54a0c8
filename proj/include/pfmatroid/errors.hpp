// Copyright 2026 The Authors.
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

#ifndef PFMATROID_ERRORS_HPP
#define PFMATROID_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace pfm {

// Structural misuse of the API: mixing rings, bad labels, wrong shapes.
class DomainError : public std::runtime_error {
 public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

class RingMismatchError : public DomainError {
 public:
  explicit RingMismatchError(const std::string& what) : DomainError(what) {}
};

// A matrix (or ring element) that was required to be invertible is not.
class NotInvertibleError : public std::runtime_error {
 public:
  explicit NotInvertibleError(const std::string& what)
      : std::runtime_error(what) {}
};

// A square root was requested of a value that is not a perfect square in its
// field. For the quaternionic pseudo-determinant this signals that the input
// violated the unimodularity assumption; callers should fall back to squares.
class NotPerfectSquareError : public std::runtime_error {
 public:
  explicit NotPerfectSquareError(const std::string& what)
      : std::runtime_error(what) {}
};

// Malformed input documents (JSON parsing / validation).
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& path, const std::string& what)
      : std::runtime_error(path + ": " + what), path_(path) {}
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace pfm

#endif  // PFMATROID_ERRORS_HPP
