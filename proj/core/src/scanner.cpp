#include "ltest/scanner.hpp"

#include <algorithm>
#include <functional>

#include "ltest/error.hpp"

namespace ltest {

namespace {

struct ClassInfo {
  LanguageClass cls;
  const char* name;
};

constexpr ClassInfo kClasses[] = {
    {LanguageClass::kTestable, "k-testable"}, {LanguageClass::kThreshold, "threshold"},
    {LanguageClass::kStrictly, "strictly"},   {LanguageClass::kStrongly, "strongly"},
    {LanguageClass::kRight, "right"},         {LanguageClass::kLeft, "left"},
    {LanguageClass::kPiecewise, "piecewise"},
};

std::size_t ipow(std::size_t base, std::size_t exp) {
  std::size_t out = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (out > (std::size_t{1} << 24) / std::max<std::size_t>(base, 1)) {
      throw InvalidInput("window too wide for the alphabet");
    }
    out *= base;
  }
  return out;
}

// Offset of the first subsequence code of length `len` (len >= 1).
std::size_t subsequence_offset(std::size_t g, std::size_t len) {
  std::size_t off = 0;
  for (std::size_t j = 1; j < len; ++j) off += ipow(g, j);
  return off;
}

std::size_t factor_code(std::span<const Letter> letters, std::size_t g) {
  std::size_t code = 0;
  for (Letter a : letters) code = code * g + a;
  return code;
}

void validate(const ScanParams& p) {
  if (p.k == 0) throw InvalidInput("window width k must be at least 1");
  if (p.alphabet == 0 || p.alphabet > 255) throw InvalidInput("alphabet size must be in 1..255");
  if (p.cls == LanguageClass::kThreshold && (p.l == 0 || p.l > 255)) {
    throw InvalidInput("threshold l must be in 1..255");
  }
}

std::size_t factor_space(const ScanParams& p) {
  if (p.cls == LanguageClass::kPiecewise) return subsequence_offset(p.alphabet, p.k + 1);
  return ipow(p.alphabet, p.k);
}

void append_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t read_u32(const std::string& s, std::size_t& pos) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(static_cast<unsigned char>(s[pos++])) << (8 * i);
  return v;
}

}  // namespace

std::string to_string(LanguageClass c) {
  for (const auto& info : kClasses) {
    if (info.cls == c) return info.name;
  }
  return "?";
}

LanguageClass language_class_from_string(const std::string& name) {
  for (const auto& info : kClasses) {
    if (name == info.name) return info.cls;
  }
  if (name == "testable" || name == "lt") return LanguageClass::kTestable;
  if (name == "tlt") return LanguageClass::kThreshold;
  if (name == "pw") return LanguageClass::kPiecewise;
  throw InvalidInput("unknown language class '" + name + "'");
}

std::string ScanVector::key() const {
  std::string out;
  out.push_back(static_cast<char>(prefix.size()));
  for (Letter a : prefix) out.push_back(static_cast<char>(a));
  out.push_back(static_cast<char>(suffix.size()));
  for (Letter a : suffix) out.push_back(static_cast<char>(a));
  append_u32(out, static_cast<std::uint32_t>(counts.size()));
  out.append(counts.begin(), counts.end());
  append_u32(out, static_cast<std::uint32_t>(first_occurrence.size()));
  for (auto c : first_occurrence) append_u32(out, c);
  return out;
}

ScanVector scan(std::span<const Letter> word, const ScanParams& p) {
  validate(p);
  if (word.empty()) throw InvalidInput("signatures are defined for nonempty words only");
  const std::size_t g = p.alphabet;
  const std::size_t k = p.k;
  ScanVector v;
  v.counts.assign(factor_space(p), 0);

  if (p.cls == LanguageClass::kPiecewise) {
    // Every choice of 1..k positions, in increasing order.
    std::vector<Letter> picked;
    std::function<void(std::size_t)> choose = [&](std::size_t from) {
      if (!picked.empty()) {
        v.counts[subsequence_offset(g, picked.size()) + factor_code(picked, g)] = 1;
      }
      if (picked.size() == k) return;
      for (std::size_t i = from; i < word.size(); ++i) {
        picked.push_back(word[i]);
        choose(i + 1);
        picked.pop_back();
      }
    };
    choose(0);
    return v;
  }

  std::size_t affix = 0;
  switch (p.cls) {
    case LanguageClass::kStrictly: affix = k; break;
    case LanguageClass::kStrongly: affix = 0; break;
    default: affix = k - 1; break;
  }
  const std::size_t take = std::min(affix, word.size());
  v.prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(take));
  v.suffix.assign(word.end() - static_cast<std::ptrdiff_t>(take), word.end());

  const std::uint8_t cap = p.cls == LanguageClass::kThreshold ? static_cast<std::uint8_t>(p.l) : 1;
  if (word.size() >= k) {
    const std::size_t last = word.size() - k;
    for (std::size_t i = 0; i <= last; ++i) {
      auto code = factor_code(word.subspan(i, k), g);
      if (v.counts[code] < cap) ++v.counts[code];
    }
    if (p.cls == LanguageClass::kRight) {
      std::vector<bool> seen(v.counts.size(), false);
      for (std::size_t i = 0; i <= last; ++i) {
        auto code = factor_code(word.subspan(i, k), g);
        if (!seen[code]) {
          seen[code] = true;
          v.first_occurrence.push_back(static_cast<std::uint32_t>(code));
        }
      }
    } else if (p.cls == LanguageClass::kLeft) {
      std::vector<bool> seen(v.counts.size(), false);
      for (std::size_t i = last + 1; i-- > 0;) {
        auto code = factor_code(word.subspan(i, k), g);
        if (!seen[code]) {
          seen[code] = true;
          v.first_occurrence.push_back(static_cast<std::uint32_t>(code));
        }
      }
    }
  }
  return v;
}

Scanner::Scanner(const ScanParams& params) : params_(params) {
  validate(params_);
  if (params_.cls == LanguageClass::kLeft) {
    throw InvalidInput("left classes are scanned on the reversed language");
  }
  const std::size_t k = params_.k;
  switch (params_.cls) {
    case LanguageClass::kStrictly:
      prefix_len_ = suffix_len_ = tail_len_ = k;
      break;
    case LanguageClass::kStrongly:
      tail_len_ = k - 1;
      break;
    case LanguageClass::kPiecewise:
      break;
    default:
      prefix_len_ = suffix_len_ = tail_len_ = k - 1;
      break;
  }
  factor_space_ = factor_space(params_);
  cap_ = params_.cls == LanguageClass::kThreshold ? static_cast<std::uint8_t>(params_.l) : 1;
}

void Scanner::push(State& s, Letter a) const {
  const std::size_t g = params_.alphabet;
  const std::size_t k = params_.k;
  if (a >= g) throw InvalidInput("letter outside the alphabet");
  if (s.head.size() < prefix_len_) s.head.push_back(a);

  if (params_.cls == LanguageClass::kPiecewise) {
    auto before = s.counts;
    s.counts[a] = 1;
    for (std::size_t len = 1; len < k; ++len) {
      const std::size_t from = subsequence_offset(g, len);
      const std::size_t to = subsequence_offset(g, len + 1);
      for (std::size_t code = from; code < to; ++code) {
        if (before[code]) s.counts[to + (code - from) * g + a] = 1;
      }
    }
    return;
  }

  if (s.tail.size() + 1 >= k) {
    std::size_t code = 0;
    for (std::size_t i = s.tail.size() + 1 - k; i < s.tail.size(); ++i) code = code * g + s.tail[i];
    code = code * g + a;
    if (s.counts[code] == 0 && params_.cls == LanguageClass::kRight) {
      s.order.push_back(static_cast<std::uint32_t>(code));
    }
    if (s.counts[code] < cap_) ++s.counts[code];
  }
  s.tail.push_back(a);
  if (s.tail.size() > tail_len_) s.tail.erase(s.tail.begin());
}

std::string Scanner::encode(const State& s) const {
  std::string out;
  out.push_back(static_cast<char>(s.head.size()));
  for (Letter a : s.head) out.push_back(static_cast<char>(a));
  out.push_back(static_cast<char>(s.tail.size()));
  for (Letter a : s.tail) out.push_back(static_cast<char>(a));
  out.append(s.counts.begin(), s.counts.end());
  for (auto c : s.order) append_u32(out, c);
  return out;
}

Scanner::State Scanner::decode(const std::string& str) const {
  State s;
  std::size_t pos = 0;
  const auto head = static_cast<unsigned char>(str[pos++]);
  for (std::size_t i = 0; i < head; ++i) s.head.push_back(static_cast<unsigned char>(str[pos++]));
  const auto tail = static_cast<unsigned char>(str[pos++]);
  for (std::size_t i = 0; i < tail; ++i) s.tail.push_back(static_cast<unsigned char>(str[pos++]));
  s.counts.assign(str.begin() + static_cast<std::ptrdiff_t>(pos),
                  str.begin() + static_cast<std::ptrdiff_t>(pos + factor_space_));
  pos += factor_space_;
  while (pos < str.size()) s.order.push_back(read_u32(str, pos));
  return s;
}

std::string Scanner::start(Letter a) const {
  State s;
  s.counts.assign(factor_space_, 0);
  push(s, a);
  return encode(s);
}

std::string Scanner::step(const std::string& state, Letter a) const {
  State s = decode(state);
  push(s, a);
  return encode(s);
}

ScanVector Scanner::signature(const std::string& state) const {
  State s = decode(state);
  ScanVector v;
  v.prefix = s.head;
  const std::size_t take = std::min(suffix_len_, s.tail.size());
  v.suffix.assign(s.tail.end() - static_cast<std::ptrdiff_t>(take), s.tail.end());
  v.counts = std::move(s.counts);
  v.first_occurrence = std::move(s.order);
  return v;
}

}  // namespace ltest
