/*
 * Copyright (c) 2026, The choreo authors
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
 */

#ifndef CHOREO_NAMES_HPP_
#define CHOREO_NAMES_HPP_

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

namespace choreo {

/// Opaque identifier. The tag keeps process names, variables and procedure
/// names from being mixed up.
template <class Tag>
class Name {
 public:
  Name() = default;
  explicit Name(std::string value) : value_(std::move(value)) {}
  explicit Name(std::string_view value) : value_(value) {}
  explicit Name(const char* value) : value_(value) {}

  const std::string& str() const { return value_; }

  friend bool operator==(const Name&, const Name&) = default;
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) {
    return a.value_.compare(b.value_) <=> 0;
  }

  friend std::ostream& operator<<(std::ostream& os, const Name& name) {
    return os << name.value_;
  }

 private:
  std::string value_;
};

struct PidTag {};
struct VarTag {};
struct RecVarTag {};

using Pid = Name<PidTag>;
using Var = Name<VarTag>;
using RecVar = Name<RecVarTag>;

using Value = std::uint64_t;

/// Selection labels.
enum class Label : std::uint8_t { kLeft, kRight };

inline std::string_view to_string(Label label) {
  return label == Label::kLeft ? "left" : "right";
}

/// Immutable shared node. Copies are cheap; comparison is structural.
template <class T>
class Box {
 public:
  Box(T value)  // NOLINT(google-explicit-constructor)
      : ptr_(std::make_shared<const T>(std::move(value))) {}

  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }

  friend bool operator==(const Box& a, const Box& b) {
    return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_;
  }
  friend std::strong_ordering operator<=>(const Box& a, const Box& b) {
    if (a.ptr_ == b.ptr_) return std::strong_ordering::equal;
    return *a.ptr_ <=> *b.ptr_;
  }

 private:
  std::shared_ptr<const T> ptr_;
};

/// Helper for std::visit over several lambdas.
template <class... Fs>
struct Overloaded : Fs... {
  using Fs::operator()...;
};
template <class... Fs>
Overloaded(Fs...) -> Overloaded<Fs...>;

}  // namespace choreo

template <class Tag>
struct std::hash<choreo::Name<Tag>> {
  std::size_t operator()(const choreo::Name<Tag>& name) const noexcept {
    return std::hash<std::string>{}(name.str());
  }
};

#endif  // CHOREO_NAMES_HPP_
