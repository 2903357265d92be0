#ifndef FPM_WORD_HPP
#define FPM_WORD_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fpm {

/// A finite word over the binary alphabet {0,1}.
///
/// Words are kept as explicit character sequences; at desk scale this keeps
/// every operation directly inspectable. The empty word prints as "@" via
/// pretty() (stand-in for epsilon in plain ASCII contexts) and as "" in
/// machine output.
class Word {
 public:
  Word() = default;
  explicit Word(std::string bits) : bits_(std::move(bits)) {
    for (char c : bits_)
      if (c != '0' && c != '1') throw std::invalid_argument("Word: symbol outside {0,1}");
  }

  static Word zeros(std::size_t n) { return Word(std::string(n, '0')); }

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  char at(std::size_t i) const { return bits_.at(i); }
  const std::string& str() const { return bits_; }

  Word operator+(const Word& other) const {
    Word w;
    w.bits_ = bits_ + other.bits_;
    return w;
  }
  void push(char c) {
    if (c != '0' && c != '1') throw std::invalid_argument("Word::push");
    bits_.push_back(c);
  }

  bool isPrefixOf(const Word& other) const {
    return bits_.size() <= other.bits_.size() &&
           other.bits_.compare(0, bits_.size(), bits_) == 0;
  }
  bool isStrictPrefixOf(const Word& other) const {
    return bits_.size() < other.bits_.size() && isPrefixOf(other);
  }

  Word prefix(std::size_t n) const { return Word(bits_.substr(0, n)); }
  /// The word with its first n symbols removed; requires n <= size().
  Word drop(std::size_t n) const {
    if (n > bits_.size()) throw std::out_of_range("Word::drop");
    return Word(bits_.substr(n));
  }

  bool operator==(const Word&) const = default;
  auto operator<=>(const Word&) const = default;  // shortlex-free raw string order

  std::string pretty() const { return bits_.empty() ? std::string("\xCE\xB5") : bits_; }

 private:
  std::string bits_;
};

/// A finite word over {0,1,#}; the three-letter alphabet used by the
/// hash-affix embedding and the per-letter binary encoding.
class TriWord {
 public:
  TriWord() = default;
  explicit TriWord(std::string s) : sym_(std::move(s)) {
    for (char c : sym_)
      if (c != '0' && c != '1' && c != '#')
        throw std::invalid_argument("TriWord: symbol outside {0,1,#}");
  }

  std::size_t size() const { return sym_.size(); }
  bool empty() const { return sym_.empty(); }
  char at(std::size_t i) const { return sym_.at(i); }
  const std::string& str() const { return sym_; }

  TriWord operator+(const TriWord& other) const {
    TriWord t;
    t.sym_ = sym_ + other.sym_;
    return t;
  }

  bool operator==(const TriWord&) const = default;
  auto operator<=>(const TriWord&) const = default;

  std::string pretty() const { return sym_.empty() ? std::string("\xCE\xB5") : sym_; }

 private:
  std::string sym_;
};

/// Per-letter binary encoding: 0 -> 00, 1 -> 01, # -> 11.
Word encode3(const TriWord& w);

/// Inverse of encode3; defined exactly on {00,01,11}*.
std::optional<TriWord> decode3(const Word& u);

/// x -> x#.
TriWord hashAffix(const Word& x);

/// x# -> x; undefined unless the input is a binary word followed by a single
/// terminal #.
std::optional<Word> hashStrip(const TriWord& t);

/// Membership predicate over binary words, always used together with an
/// explicit length cap.
using WordPredicate = std::function<bool(const Word&)>;

/// A finite set of binary words, no member a prefix of another.
class PrefixCodeSet {
 public:
  PrefixCodeSet() = default;
  explicit PrefixCodeSet(std::vector<Word> members);

  const std::vector<Word>& members() const { return members_; }
  bool contains(const Word& w) const;
  std::size_t size() const { return members_.size(); }

  /// Checks the prefix-code condition pairwise.
  static bool isPrefixCode(const std::vector<Word>& ws);

 private:
  std::vector<Word> members_;  // sorted
};

/// The minimal generating prefix code of the right ideal described by
/// `member`, restricted to words of length <= maxLen: all w with member(w)
/// such that no strict prefix of w satisfies member.
PrefixCodeSet minimalPrefixCode(const WordPredicate& member, std::size_t maxLen);

/// The shortest prefix p of y with member(p), scanning lengths 0..|y|.
std::optional<Word> shortestPrefixIn(const Word& y, const WordPredicate& member);

/// All binary words of length exactly n, in lexicographic order.
std::vector<Word> allWordsOfLength(std::size_t n);

/// All binary words of length <= maxLen, in length-lexicographic order.
std::vector<Word> allWordsUpTo(std::size_t maxLen);

}  // namespace fpm

#endif
