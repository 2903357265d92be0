#include "fpm/runword.hpp"

#include <algorithm>
#include <limits>

namespace fpm {

void RunWord::canonicalize() {
  // Pull explicit zeros adjacent to the run into the count.
  {
    const std::string& h = head_.str();
    std::size_t keep = h.size();
    while (keep > 0 && h[keep - 1] == '0') --keep;
    if (keep < h.size()) {
      if (zeros_ > 0 || !tail_.empty()) {
        zeros_ += BigInt(h.size() - keep);
        head_ = Word(h.substr(0, keep));
      }
    }
  }
  {
    const std::string& t = tail_.str();
    std::size_t skip = 0;
    while (skip < t.size() && t[skip] == '0') ++skip;
    if (skip > 0 && zeros_ > 0) {
      zeros_ += BigInt(skip);
      tail_ = Word(t.substr(skip));
    }
  }
  if (zeros_ == 0 && !tail_.empty()) {
    head_ = head_ + tail_;
    tail_ = Word();
  } else if (zeros_ > 0 && zeros_ <= BigInt(kFlattenCap)) {
    head_ = head_ + Word::zeros(zeros_.get_ui()) + tail_;
    zeros_ = 0;
    tail_ = Word();
  }
}

std::optional<Word> RunWord::toWord(std::size_t cap) const {
  if (size() > BigInt(static_cast<unsigned long>(cap))) return std::nullopt;
  return head_ + Word::zeros(zeros_.get_ui()) + tail_;
}

std::string RunWord::materializeFront(std::size_t n) const {
  std::string out;
  out.reserve(n);
  const std::string& h = head_.str();
  for (std::size_t i = 0; i < h.size() && out.size() < n; ++i) out += h[i];
  BigInt left = zeros_;
  while (left > 0 && out.size() < n) {
    out += '0';
    left -= 1;
  }
  const std::string& t = tail_.str();
  for (std::size_t i = 0; i < t.size() && out.size() < n; ++i) out += t[i];
  return out;
}

RunWord RunWord::prepend(const Word& v) const { return RunWord(v + head_, zeros_, tail_); }

RunWord RunWord::append(const Word& v) const {
  if (zeros_ == 0) return RunWord(head_ + v, 0, Word());
  return RunWord(head_, zeros_, tail_ + v);
}

std::optional<RunWord> RunWord::dropOne() const {
  if (!head_.empty()) return RunWord(head_.drop(1), zeros_, tail_);
  if (zeros_ > 0) return RunWord(Word(), zeros_ - 1, tail_);
  if (!tail_.empty()) return RunWord(Word(), 0, tail_.drop(1));
  return std::nullopt;
}

std::optional<RunWord> RunWord::dropFront(const BigInt& k) const {
  if (k < 0 || size() < k) return std::nullopt;
  BigInt left = k;
  Word h = head_;
  BigInt z = zeros_;
  Word t = tail_;
  if (left <= BigInt(static_cast<unsigned long>(h.size()))) {
    return RunWord(h.drop(left.get_ui()), z, t);
  }
  left -= BigInt(static_cast<unsigned long>(h.size()));
  if (left <= z) return RunWord(Word(), z - left, t);
  left -= z;
  return RunWord(t.drop(left.get_ui()), 0, Word());
}

bool RunWord::operator==(const RunWord& other) const {
  if (size() != other.size()) return false;
  // Outside the two explicit fringes both operands sit inside their
  // zero-runs, so comparing fringes decides equality.
  std::size_t front = std::max(head_.size(), other.head_.size());
  std::size_t back = std::max(tail_.size(), other.tail_.size());
  if (BigInt(front) + BigInt(back) >= size()) {
    // Small enough to materialize outright.
    auto a = toWord(std::numeric_limits<std::size_t>::max());
    auto b = other.toWord(std::numeric_limits<std::size_t>::max());
    return a == b;
  }
  if (materializeFront(front) != other.materializeFront(front)) return false;
  auto backOf = [back](const RunWord& w) {
    std::string out;
    const std::string& t = w.tail_.str();
    std::size_t fromTail = std::min(back, t.size());
    out = t.substr(t.size() - fromTail);
    std::size_t missing = back - fromTail;
    // Preceding symbols come from the zero-run (back < size - front guarantees
    // we never reach into the head here).
    out.insert(0, std::string(missing, '0'));
    return out;
  };
  return backOf(*this) == backOf(other);
}

std::string RunWord::render() const {
  if (zeros_ == 0) return head_.pretty();
  return head_.str() + "|0^" + zeros_.get_str() + "|" + tail_.str();
}

std::optional<PadBlock> splitPadBlock(const RunWord& t) {
  BigInt h = 0;
  Word hd = t.head();
  BigInt z = t.zeros();
  Word tl = t.tail();
  std::size_t i = 0;
  while (i < hd.size() && hd.at(i) == '0') {
    h += 1;
    ++i;
  }
  if (i == hd.size()) {
    h += z;
    z = 0;
    hd = tl;
    tl = Word();
    i = 0;
    while (i < hd.size() && hd.at(i) == '0') {
      h += 1;
      ++i;
    }
  }
  // Expect "11" next, all within the current explicit segment.
  if (i + 2 > hd.size() || hd.at(i) != '1' || hd.at(i + 1) != '1') return std::nullopt;
  return PadBlock{h, RunWord(hd.drop(i + 2), z, tl)};
}

}  // namespace fpm
