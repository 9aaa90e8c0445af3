#include "mzv/index.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <ostream>
#include <utility>

#include "mzv/errors.hpp"

namespace mzv {

namespace {

void check_parts(const std::vector<int>& parts) {
  for (int p : parts) {
    if (p < 1) {
      throw DomainError("index parts must be positive, got " + std::to_string(p));
    }
  }
}

void compositions_into(int n, int parts, std::vector<int>& prefix,
                       std::vector<Index>& out) {
  if (parts == 0) {
    if (n == 0) out.emplace_back(prefix);
    return;
  }
  for (int first = 1; first <= n - (parts - 1); ++first) {
    prefix.push_back(first);
    compositions_into(n - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

void weak_compositions_into(int n, int parts, std::vector<int>& prefix,
                            std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    prefix.push_back(n);
    out.push_back(prefix);
    prefix.pop_back();
    return;
  }
  for (int first = 0; first <= n; ++first) {
    prefix.push_back(first);
    weak_compositions_into(n - first, parts - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Index::Index(std::initializer_list<int> parts) : parts_(parts) { check_parts(parts_); }

Index::Index(std::vector<int> parts) : parts_(std::move(parts)) { check_parts(parts_); }

int Index::weight() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Index::height() const noexcept {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(),
                                        [](int p) { return p >= 2; }));
}

bool Index::admissible() const noexcept { return !parts_.empty() && parts_.front() >= 2; }

Index Index::reversed() const {
  Index r;
  r.parts_.assign(parts_.rbegin(), parts_.rend());
  return r;
}

Index Index::operator+(const Index& other) const {
  Index r = *this;
  r.parts_.insert(r.parts_.end(), other.parts_.begin(), other.parts_.end());
  return r;
}

IndexStats stats(const Index& k) {
  return IndexStats{k.weight(), static_cast<int>(k.depth()), k.height(), k.admissible()};
}

Index dual(const Index& k) {
  if (!k.admissible()) {
    throw AdmissibilityError("dual index requires k_1 >= 2, got (" + format_index(k) + ")");
  }
  // k = (a_1+1, 1^{b_1-1}, ..., a_s+1, 1^{b_s-1})
  std::vector<std::pair<int, int>> runs;
  for (int part : k) {
    if (part >= 2) {
      runs.emplace_back(part - 1, 1);
    } else {
      ++runs.back().second;
    }
  }
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k.weight() - static_cast<int>(k.depth())));
  for (auto it = runs.rbegin(); it != runs.rend(); ++it) {
    const auto [a, b] = *it;
    out.push_back(b + 1);
    out.insert(out.end(), static_cast<std::size_t>(a - 1), 1);
  }
  return Index(std::move(out));
}

Index hoffman_dual(const Index& k) {
  if (k.empty()) throw DomainError("Hoffman dual requires depth >= 1");
  // Separators between consecutive ones: true for '+', false for ','.
  std::vector<bool> plus;
  for (std::size_t i = 0; i < k.depth(); ++i) {
    if (i > 0) plus.push_back(false);
    for (int j = 1; j < k[i]; ++j) plus.push_back(true);
  }
  std::vector<int> out{1};
  for (bool sep : plus) {
    if (sep) {
      out.push_back(1);  // was '+', becomes ','
    } else {
      ++out.back();  // was ',', becomes '+'
    }
  }
  return Index(std::move(out));
}

std::vector<Index> refinements(const Index& k) {
  std::vector<Index> acc{Index()};
  for (int part : k) {
    std::vector<Index> blocks;
    for (int d = 1; d <= part; ++d) {
      auto c = compositions(part, d);
      blocks.insert(blocks.end(), c.begin(), c.end());
    }
    std::vector<Index> next;
    next.reserve(acc.size() * blocks.size());
    for (const auto& prefix : acc) {
      for (const auto& b : blocks) next.push_back(prefix + b);
    }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

std::vector<Index> compositions(int n, int parts) {
  std::vector<Index> out;
  if (n < 0 || parts < 0 || parts > n) return out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  compositions_into(n, parts, prefix, out);
  return out;
}

std::vector<std::vector<int>> weak_compositions(int n, int parts) {
  std::vector<std::vector<int>> out;
  if (n < 0 || parts < 0) return out;
  if (parts == 0) {
    if (n == 0) out.emplace_back();
    return out;
  }
  std::vector<int> prefix;
  weak_compositions_into(n, parts, prefix, out);
  return out;
}

Index add_parts(const Index& k, const std::vector<int>& shift) {
  if (shift.size() != k.depth()) {
    throw DomainError("componentwise sum needs equal depths");
  }
  std::vector<int> out(k.parts());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += shift[i];
  return Index(std::move(out));
}

std::vector<Index> indices_of_weight(int weight) {
  std::vector<Index> out;
  for (int d = 1; d <= weight; ++d) {
    auto c = compositions(weight, d);
    out.insert(out.end(), c.begin(), c.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Index parse_index(std::string_view text) {
  std::size_t pos = 0;
  const auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  bool paren = false;
  if (pos < text.size() && text[pos] == '(') {
    paren = true;
    ++pos;
    skip_ws();
  }
  std::vector<int> parts;
  const bool empty_body = pos == text.size() || (paren && text[pos] == ')');
  if (!empty_body) {
    for (;;) {
      skip_ws();
      const std::size_t start = pos;
      if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) ++pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start || !std::isdigit(static_cast<unsigned char>(text[pos - 1]))) {
        throw ParseError("expected an integer", start);
      }
      long value = 0;
      const char* first = text.data() + start + (text[start] == '+' ? 1 : 0);
      const auto [ptr, ec] = std::from_chars(first, text.data() + pos, value);
      if (ec != std::errc() || value > 1'000'000) {
        throw ParseError("integer out of range", start);
      }
      if (value < 1) {
        throw DomainError("index parts must be positive, got " + std::to_string(value) +
                          " at offset " + std::to_string(start));
      }
      parts.push_back(static_cast<int>(value));
      skip_ws();
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  if (paren) {
    if (pos >= text.size() || text[pos] != ')') throw ParseError("expected ')'", pos);
    ++pos;
    skip_ws();
  }
  if (pos != text.size()) throw ParseError("unexpected character", pos);
  return Index(std::move(parts));
}

std::string format_index(const Index& k) {
  std::string s;
  for (std::size_t i = 0; i < k.depth(); ++i) {
    if (i) s += ',';
    s += std::to_string(k[i]);
  }
  return s;
}

std::ostream& operator<<(std::ostream& os, const Index& k) {
  return os << '(' << format_index(k) << ')';
}

}  // namespace mzv
