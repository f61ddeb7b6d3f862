#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace fideal {

enum class ErrorCode {
  kParse,
  kIndexOutOfRange,
  kEmptyIdeal,
  kEmptyGenerator,
  kAmbientTooLarge,
  kDegenerateComplex,
  kNotPure,
  kInvalidArgument,
  kIo,
};

std::string_view to_string(ErrorCode code);

// 1-based position inside a text input.
struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourcePos> pos = std::nullopt)
      : std::runtime_error(message), code_(code), pos_(pos) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourcePos>& position() const noexcept { return pos_; }

 private:
  ErrorCode code_;
  std::optional<SourcePos> pos_;
};

}  // namespace fideal
