#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "ltest/graph.hpp"

namespace ltest {

// Language classes decided by the oracle. Each fixes what a window of width
// k records about a word.
enum class LanguageClass {
  kTestable,   // i_(k-1), t_(k-1), set of k-factors
  kThreshold,  // i_(k-1), t_(k-1), k-factor counts capped at l
  kStrictly,   // i_k, t_k, set of k-factors
  kStrongly,   // set of k-factors only
  kRight,      // i_(k-1), t_(k-1), distinct k-factors by first occurrence from the left
  kLeft,       // i_(k-1), t_(k-1), distinct k-factors by first occurrence from the right
  kPiecewise,  // set of subsequences of length 1..k
};

std::string to_string(LanguageClass c);
LanguageClass language_class_from_string(const std::string& name);

struct ScanParams {
  LanguageClass cls = LanguageClass::kTestable;
  std::size_t k = 1;
  std::size_t l = 1;  // threshold only
  std::size_t alphabet = 1;
};

// The signature of a word. Unused parts stay empty. Factors are coded as
// base-alphabet numbers; for kPiecewise, subsequences of length L start at
// offset alphabet + alphabet^2 + ... + alphabet^(L-1).
struct ScanVector {
  std::vector<Letter> prefix;
  std::vector<Letter> suffix;
  std::vector<std::uint8_t> counts;           // per factor code; capped at l (1 for set classes)
  std::vector<std::uint32_t> first_occurrence;  // kRight / kLeft

  bool operator==(const ScanVector&) const = default;
  std::string key() const;
};

// Signature of a nonempty word, computed directly from the class definition.
ScanVector scan(std::span<const Letter> word, const ScanParams& params);

// Incremental left-to-right version of `scan`. States are interned strings;
// two words reach the same state only if they have the same signature, and
// the signature of a state is recovered with `signature`. kLeft is not
// scannable left to right and is rejected.
class Scanner {
 public:
  explicit Scanner(const ScanParams& params);

  const ScanParams& params() const noexcept { return params_; }

  // State after the one-letter word `a`.
  std::string start(Letter a) const;
  std::string step(const std::string& state, Letter a) const;
  ScanVector signature(const std::string& state) const;

 private:
  struct State {
    std::vector<Letter> head;
    std::vector<Letter> tail;
    std::vector<std::uint8_t> counts;
    std::vector<std::uint32_t> order;
  };
  State decode(const std::string& s) const;
  std::string encode(const State& s) const;
  void push(State& s, Letter a) const;

  ScanParams params_;
  std::size_t prefix_len_ = 0;
  std::size_t suffix_len_ = 0;
  std::size_t tail_len_ = 0;
  std::size_t factor_space_ = 0;
  std::uint8_t cap_ = 1;
};

}  // namespace ltest
