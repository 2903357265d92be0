#ifndef FPM_RUNWORD_HPP
#define FPM_RUNWORD_HPP

#include <optional>
#include <string>

#include "fpm/bounds.hpp"
#include "fpm/word.hpp"

namespace fpm {

/// A binary word of the shape head . 0^zeros . tail, with the zero-run kept
/// as a count. Padded inputs in the universal-evaluation pipeline carry
/// zero-runs far beyond anything that can be materialized, while their head
/// and tail stay short; this type makes those words first-class values.
///
/// Canonical form: trailing zeros of head and leading zeros of tail are
/// absorbed into the run, and words whose run is short are flattened to an
/// explicit head. Canonicalization keeps equality checks cheap (compare
/// sizes, then the explicit fringes; everything between is '0' on both
/// sides by construction).
class RunWord {
 public:
  RunWord() = default;
  RunWord(const Word& w) : head_(w) { canonicalize(); }  // implicit lift
  RunWord(Word head, BigInt zeros, Word tail)
      : head_(std::move(head)), zeros_(std::move(zeros)), tail_(std::move(tail)) {
    if (zeros_ < 0) throw std::invalid_argument("RunWord: negative run");
    canonicalize();
  }

  BigInt size() const { return BigInt(head_.size()) + zeros_ + BigInt(tail_.size()); }
  bool empty() const { return head_.empty() && zeros_ == 0 && tail_.empty(); }
  bool isExplicit() const { return zeros_ == 0; }

  const Word& head() const { return head_; }
  const BigInt& zeros() const { return zeros_; }
  const Word& tail() const { return tail_; }

  /// Explicit rendering when the total length fits under cap.
  std::optional<Word> toWord(std::size_t cap = kFlattenCap) const;

  /// The first min(n, size) symbols, materialized.
  std::string materializeFront(std::size_t n) const;

  RunWord prepend(const Word& v) const;
  RunWord append(const Word& v) const;

  /// Without its first symbol; nullopt on the empty word.
  std::optional<RunWord> dropOne() const;
  /// Without its first k symbols; nullopt when size < k.
  std::optional<RunWord> dropFront(const BigInt& k) const;

  bool operator==(const RunWord& other) const;
  bool operator!=(const RunWord& other) const { return !(*this == other); }

  std::string render() const;  // diagnostic "[head]|0^z|[tail]"

  static constexpr std::size_t kFlattenCap = 1024;

 private:
  void canonicalize();

  Word head_;
  BigInt zeros_ = 0;
  Word tail_;
};

/// Splits t as 0^h 11 rest; nullopt when t is not of that shape.
struct PadBlock {
  BigInt h;
  RunWord rest;
};
std::optional<PadBlock> splitPadBlock(const RunWord& t);

}  // namespace fpm

#endif
