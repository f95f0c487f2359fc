// Copyright 2026 The finring Authors.
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


#include "finring/parse.hpp"

#include <cctype>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "finring/error.hpp"

namespace finring {
namespace {

struct Node;

struct Arg {
  std::size_t position = 0;
  std::variant<std::uint64_t, std::vector<std::uint64_t>, std::vector<Node>> value;
};

struct Node {
  std::string name;
  std::size_t position = 0;
  std::vector<Arg> args;
};

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Node parse() {
    Node node = spec();
    skip();
    if (pos_ != text_.size()) fail("expected end of input");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const {
    std::string found = pos_ < text_.size() ? std::string("'") + text_[pos_] + "'" : "end of input";
    throw ParseError(message + ", found " + found, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t integer() {
    skip();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected integer");
    }
    const std::size_t start = pos_;
    std::uint64_t value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<std::uint64_t>(text_[pos_++] - '0');
      if (value > UINT32_MAX) {
        pos_ = start;
        fail("integer out of range");
      }
    }
    return value;
  }

  Node spec() {
    skip();
    Node node;
    node.position = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      node.name += static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_++])));
    }
    if (node.name.empty()) fail("expected constructor name");
    expect('(');
    do {
      node.args.push_back(arg());
    } while (peek(',') && ++pos_);
    expect(')');
    return node;
  }

  Arg arg() {
    skip();
    Arg out;
    out.position = pos_;
    if (peek('[')) {
      ++pos_;
      std::vector<std::uint64_t> list;
      do {
        list.push_back(integer());
      } while (peek(',') && ++pos_);
      expect(']');
      out.value = std::move(list);
    } else if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      out.value = integer();
    } else {
      out.value = std::vector<Node>{spec()};
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

[[noreturn]] void arity(const Node& node, const std::string& expected) {
  throw ParseError(node.name + " expects " + expected, node.position);
}

std::uint32_t as_int(const Arg& arg, const Node& node) {
  if (const auto* v = std::get_if<std::uint64_t>(&arg.value)) return static_cast<std::uint32_t>(*v);
  throw ParseError(node.name + ": expected integer argument", arg.position);
}

const Node& as_spec(const Arg& arg, const Node& node) {
  if (const auto* v = std::get_if<std::vector<Node>>(&arg.value)) return v->front();
  throw ParseError(node.name + ": expected ring argument", arg.position);
}

GfSpec build_gf(const Node& node) {
  if (node.name != "gf") throw ParseError("expected gf(...) field", node.position);
  const auto& a = node.args;
  if (a.size() == 1) {
    const std::uint32_t q = as_int(a[0], node);
    const auto pk = prime_power(q);
    if (!pk) throw ArgumentError(std::to_string(q) + " is not a prime power");
    return gf_spec(pk->first, pk->second);
  }
  if (a.size() == 2 || a.size() == 3) {
    const std::uint32_t p = as_int(a[0], node), k = as_int(a[1], node);
    if (!is_prime(p)) throw ArgumentError("gf characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw ArgumentError("gf degree must be at least 1");
    GfSpec g;
    g.p = p;
    g.k = k;
    if (a.size() == 3) {
      const auto* list = std::get_if<std::vector<std::uint64_t>>(&a[2].value);
      if (!list) throw ParseError("gf: expected modulus list", a[2].position);
      g.modulus.assign(list->begin(), list->end());
    } else {
      // Validate the degree against the size limit before searching for a modulus.
      ring_size(RingSpec{GfSpec{p, k, {}}});
      g.modulus = default_modulus(p, k);
    }
    return g;
  }
  arity(node, "(q), (p,k) or (p,k,[modulus])");
}

RingSpec build(const Node& node) {
  const auto& a = node.args;
  if (node.name == "zmod") {
    if (a.size() != 1) arity(node, "one integer");
    return zmod(as_int(a[0], node));
  }
  if (node.name == "gf") return RingSpec{build_gf(node)};
  if (node.name == "mat") {
    if (a.size() != 2) arity(node, "(n, field)");
    return mat(as_int(a[0], node), build_gf(as_spec(a[1], node)));
  }
  if (node.name == "trunc") {
    if (a.size() != 2) arity(node, "(field, k)");
    return trunc(build_gf(as_spec(a[0], node)), as_int(a[1], node));
  }
  if (node.name == "prod") {
    std::vector<RingSpec> factors;
    for (const auto& arg : a) factors.push_back(build(as_spec(arg, node)));
    return prod(std::move(factors));
  }
  throw ParseError("unknown constructor '" + node.name + "' (expected zmod, gf, mat, prod or trunc)",
                   node.position);
}

}  // namespace

RingSpec parse_ring_spec(std::string_view text) {
  const Node root = Parser(text).parse();
  RingSpec spec = build(root);
  validate(spec);
  ring_size(spec);
  return spec;
}

}  // namespace finring
