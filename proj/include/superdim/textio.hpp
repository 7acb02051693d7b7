#pragma once

// Text forms used by the CLI and the tests:
//   weight     "m|n: a1,...,am ; b1,...,bn"   (spaces optional, ';' and the
//              odd list may be omitted when n = 0)
//   partition  "(3,1,1)" or "()"
//   block      "m|n: c1,...,c_{m-n}"          (cross positions)
//   vee set    "{0,2,4}" or "0,2,4"

#include <cctype>
#include <string>
#include <vector>

#include "superdim/error.hpp"
#include "superdim/schur.hpp"
#include "superdim/weights.hpp"

namespace superdim {

namespace detail {

class TextCursor {
 public:
  explicit TextCursor(const std::string& text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!eat(c))
      fail(Errc::ParseError, std::string("expected '") + c + "' at position " +
                                 std::to_string(pos_));
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }

  long long integer() {
    skip_ws();
    size_t start = pos_;
    bool neg = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      neg = text_[pos_] == '-';
      ++pos_;
    }
    long long value = 0;
    bool any = false;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      ++pos_;
      any = true;
    }
    if (!any)
      fail(Errc::ParseError, "expected an integer at position " + std::to_string(start));
    return neg ? -value : value;
  }

  std::vector<long long> integer_list() {
    std::vector<long long> out;
    out.push_back(integer());
    while (eat(',')) out.push_back(integer());
    return out;
  }

  size_t position() const { return pos_; }

 private:
  const std::string& text_;
  size_t pos_ = 0;
};

}  // namespace detail

inline SuperWeight parse_weight(const std::string& text) {
  detail::TextCursor cur(text);
  long long m = cur.integer();
  cur.expect('|');
  long long n = cur.integer();
  cur.expect(':');
  std::vector<Pos> parts;
  if (m > 0) {
    parts = cur.integer_list();
    if (static_cast<long long>(parts.size()) != m)
      fail(Errc::ParseError, "expected " + std::to_string(m) + " even parts, got " +
                                 std::to_string(parts.size()) + " at position " +
                                 std::to_string(cur.position()));
  }
  if (n > 0) {
    cur.expect(';');
    std::vector<long long> odd = cur.integer_list();
    if (static_cast<long long>(odd.size()) != n)
      fail(Errc::ParseError, "expected " + std::to_string(n) + " odd parts, got " +
                                 std::to_string(odd.size()) + " at position " +
                                 std::to_string(cur.position()));
    parts.insert(parts.end(), odd.begin(), odd.end());
  } else {
    cur.eat(';');
  }
  if (!cur.at_end())
    fail(Errc::ParseError, "trailing input at position " + std::to_string(cur.position()));
  return validate_weight(static_cast<int>(m), static_cast<int>(n), std::move(parts));
}

inline std::string format_weight(const SuperWeight& w) {
  std::string out = std::to_string(w.m) + "|" + std::to_string(w.n) + ": ";
  for (int i = 0; i < w.m; ++i) {
    if (i) out += ",";
    out += std::to_string(w.parts[i]);
  }
  if (w.n > 0) {
    out += " ; ";
    for (int i = 0; i < w.n; ++i) {
      if (i) out += ",";
      out += std::to_string(w.parts[w.m + i]);
    }
  }
  return out;
}

inline Partition parse_partition(const std::string& text) {
  detail::TextCursor cur(text);
  cur.expect('(');
  std::vector<Pos> parts;
  if (!cur.peek(')')) parts = cur.integer_list();
  cur.expect(')');
  if (!cur.at_end())
    fail(Errc::ParseError, "trailing input at position " + std::to_string(cur.position()));
  return make_partition(std::move(parts));
}

inline std::string format_partition(const Partition& p) {
  std::string out = "(";
  for (size_t i = 0; i < p.parts.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(p.parts[i]);
  }
  return out + ")";
}

// Maximal atypical block: "m|n: c1,...,c_{m-n}" lists the cross positions.
inline BlockId parse_block(const std::string& text) {
  detail::TextCursor cur(text);
  long long m = cur.integer();
  cur.expect('|');
  long long n = cur.integer();
  if (m < 1 || n < 0 || m < n)
    fail(Errc::ParseError, "need m >= n >= 0 and m >= 1");
  BlockId b;
  b.m = static_cast<int>(m);
  b.n = static_cast<int>(n);
  if (cur.eat(':') && !cur.at_end()) b.crosses = make_pos_set(cur.integer_list());
  if (!cur.at_end())
    fail(Errc::ParseError, "trailing input at position " + std::to_string(cur.position()));
  if (static_cast<long long>(b.crosses.size()) != m - n)
    fail(Errc::ParseError, "expected " + std::to_string(m - n) + " cross positions");
  return b;
}

inline PosSet parse_pos_set(const std::string& text) {
  detail::TextCursor cur(text);
  bool braced = cur.eat('{');
  PosSet out;
  if (!(braced && cur.peek('}')) && !cur.at_end()) out = cur.integer_list();
  if (braced) cur.expect('}');
  if (!cur.at_end())
    fail(Errc::ParseError, "trailing input at position " + std::to_string(cur.position()));
  return make_pos_set(std::move(out));
}

inline std::string format_pos_set(const PosSet& s) {
  std::string out = "{";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "}";
}

}  // namespace superdim
