// Copyright 2026 The bs-sim authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BSSIM_ERRORS_HPP
#define BSSIM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bssim {

/// Base class of every error thrown by this library.
class sim_error : public std::runtime_error {
 public:
  explicit sim_error(const std::string& what) : std::runtime_error(what) {}
};

/// Matrix or vector shapes do not line up.
class dimension_error : public sim_error {
 public:
  explicit dimension_error(const std::string& what) : sim_error(what) {}
};

/// Occupation patterns are malformed or violate photon-number conservation.
class pattern_error : public sim_error {
 public:
  explicit pattern_error(const std::string& what) : sim_error(what) {}
};

/// A scalar parameter is outside its admissible range.
class domain_error : public sim_error {
 public:
  explicit domain_error(const std::string& what) : sim_error(what) {}
};

/// A closed-form expression was requested outside its validity domain
/// (e.g. unequal squeezing where the factorized form needs equal squeezing).
class closed_form_error : public sim_error {
 public:
  explicit closed_form_error(const std::string& what) : sim_error(what) {}
};

/// Conditioning on an event of probability zero.
class conditioning_error : public sim_error {
 public:
  explicit conditioning_error(const std::string& what) : sim_error(what) {}
};

/// A numerical result failed its accuracy gate (truncation tail too large,
/// quadrature not converged, iteration not converged).
class accuracy_error : public sim_error {
 public:
  explicit accuracy_error(const std::string& what) : sim_error(what) {}
};

/// The requested instance is beyond the desk-scale limits of this toolkit.
class feasibility_error : public sim_error {
 public:
  explicit feasibility_error(const std::string& what) : sim_error(what) {}
};

}  // namespace bssim

#endif  // BSSIM_ERRORS_HPP
