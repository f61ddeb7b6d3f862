#include <cctype>
#include <cstdint>
#include <string>

#include "fideal/error.hpp"
#include "fideal/ideal.hpp"
#include "json.hpp"

namespace fideal {
namespace {

SourcePos position_of(std::string_view text, std::size_t offset) {
  SourcePos pos;
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++pos.line;
      pos.column = 1;
    } else {
      ++pos.column;
    }
  }
  return pos;
}

// Recursive-descent reader for  "n=" INT ";" gen ("," gen)*
// with gen = "x" INT ("*" "x" INT)*. Whitespace is insignificant.
class TextParser {
 public:
  TextParser(std::string_view text, int ambient_limit)
      : text_(text), limit_(std::min(ambient_limit, kMaxAmbient)) {}

  Ideal parse() {
    skip_ws();
    expect('n');
    skip_ws();
    expect('=');
    skip_ws();
    const std::size_t n_at = at_;
    const long n = integer();
    if (n < 1) fail(ErrorCode::kParse, "ambient size must be positive", n_at);
    if (n > limit_) {
      fail(ErrorCode::kAmbientTooLarge,
           "ambient size " + std::to_string(n) + " exceeds limit " +
               std::to_string(limit_),
           n_at);
    }
    n_ = static_cast<int>(n);
    skip_ws();
    expect(';');
    skip_ws();
    if (done()) throw Error(ErrorCode::kEmptyIdeal, "ideal has no generators",
                            position_of(text_, at_));

    std::vector<VertexSubset> gens;
    gens.push_back(generator());
    skip_ws();
    while (!done()) {
      expect(',');
      skip_ws();
      gens.push_back(generator());
      skip_ws();
    }
    return Ideal::from_generators(n_, std::move(gens), limit_);
  }

 private:
  VertexSubset generator() {
    VertexSubset g;
    for (;;) {
      skip_ws();
      expect('x');
      skip_ws();
      const std::size_t var_at = at_;
      const long v = integer();
      if (v < 1 || v > n_) {
        fail(ErrorCode::kIndexOutOfRange,
             "variable x" + std::to_string(v) + " outside x1..x" +
                 std::to_string(n_),
             var_at);
      }
      const VertexSubset bit{static_cast<int>(v)};
      if (g.intersects(bit)) {
        fail(ErrorCode::kParse,
             "repeated variable x" + std::to_string(v) +
                 " in a square-free generator",
             var_at);
      }
      g |= bit;
      skip_ws();
      if (done() || text_[at_] != '*') return g;
      ++at_;
    }
  }

  long integer() {
    const std::size_t start = at_;
    long value = 0;
    while (!done() && std::isdigit(static_cast<unsigned char>(text_[at_]))) {
      if (at_ - start >= 9) fail(ErrorCode::kParse, "integer too long", start);
      value = value * 10 + (text_[at_] - '0');
      ++at_;
    }
    if (at_ == start) fail(ErrorCode::kParse, "expected an integer", start);
    return value;
  }

  void expect(char c) {
    if (done()) {
      fail(ErrorCode::kParse,
           std::string("expected '") + c + "' but input ended", at_);
    }
    if (text_[at_] != c) {
      fail(ErrorCode::kParse,
           std::string("expected '") + c + "' but found '" + text_[at_] + "'",
           at_);
    }
    ++at_;
  }

  void skip_ws() {
    while (!done() && std::isspace(static_cast<unsigned char>(text_[at_]))) {
      ++at_;
    }
  }

  bool done() const { return at_ >= text_.size(); }

  [[noreturn]] void fail(ErrorCode code, const std::string& msg,
                         std::size_t offset) const {
    throw Error(code, msg, position_of(text_, offset));
  }

  std::string_view text_;
  int limit_;
  int n_ = 0;
  std::size_t at_ = 0;
};

Ideal parse_json(std::string_view text, int ambient_limit) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParse, std::string("malformed JSON: ") + e.what(),
                position_of(text, e.byte > 0 ? e.byte - 1 : 0));
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("generators")) {
    throw Error(ErrorCode::kParse,
                "JSON ideal needs an object with \"n\" and \"generators\"");
  }
  const auto& jn = doc["n"];
  if (!jn.is_number_integer() || jn.get<long long>() < 1) {
    throw Error(ErrorCode::kParse, "\"n\" must be a positive integer");
  }
  const long long n = jn.get<long long>();
  const int limit = std::min(ambient_limit, kMaxAmbient);
  if (n > limit) {
    throw Error(ErrorCode::kAmbientTooLarge,
                "ambient size " + std::to_string(n) + " exceeds limit " +
                    std::to_string(limit));
  }
  const auto& jgens = doc["generators"];
  if (!jgens.is_array()) {
    throw Error(ErrorCode::kParse, "\"generators\" must be an array");
  }
  std::vector<VertexSubset> gens;
  for (const auto& jg : jgens) {
    if (!jg.is_array()) {
      throw Error(ErrorCode::kParse, "each generator must be an array");
    }
    VertexSubset g;
    for (const auto& jv : jg) {
      if (!jv.is_number_integer()) {
        throw Error(ErrorCode::kParse, "variable indices must be integers");
      }
      const long long v = jv.get<long long>();
      if (v < 1 || v > n) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "variable x" + std::to_string(v) + " outside x1..x" +
                        std::to_string(n));
      }
      const VertexSubset bit{static_cast<int>(v)};
      if (g.intersects(bit)) {
        throw Error(ErrorCode::kParse, "repeated variable x" +
                                           std::to_string(v) +
                                           " in a square-free generator");
      }
      g |= bit;
    }
    gens.push_back(g);
  }
  return Ideal::from_generators(static_cast<int>(n), std::move(gens), limit);
}

}  // namespace

Ideal parse_ideal(std::string_view text, int ambient_limit) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') {
    return parse_json(text, ambient_limit);
  }
  return TextParser(text, ambient_limit).parse();
}

}  // namespace fideal
