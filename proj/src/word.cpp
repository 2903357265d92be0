#include "fpm/word.hpp"

#include <algorithm>

namespace fpm {

Word encode3(const TriWord& w) {
  std::string out;
  out.reserve(2 * w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    switch (w.at(i)) {
      case '0': out += "00"; break;
      case '1': out += "01"; break;
      case '#': out += "11"; break;
    }
  }
  return Word(out);
}

std::optional<TriWord> decode3(const Word& u) {
  if (u.size() % 2 != 0) return std::nullopt;
  std::string out;
  out.reserve(u.size() / 2);
  for (std::size_t i = 0; i < u.size(); i += 2) {
    char a = u.at(i), b = u.at(i + 1);
    if (a == '0' && b == '0') out += '0';
    else if (a == '0' && b == '1') out += '1';
    else if (a == '1' && b == '1') out += '#';
    else return std::nullopt;  // block "10"
  }
  return TriWord(out);
}

TriWord hashAffix(const Word& x) { return TriWord(x.str() + "#"); }

std::optional<Word> hashStrip(const TriWord& t) {
  if (t.empty() || t.at(t.size() - 1) != '#') return std::nullopt;
  std::string body = t.str().substr(0, t.size() - 1);
  for (char c : body)
    if (c == '#') return std::nullopt;
  return Word(body);
}

PrefixCodeSet::PrefixCodeSet(std::vector<Word> members) : members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (!isPrefixCode(members_)) throw std::invalid_argument("PrefixCodeSet: not a prefix code");
}

bool PrefixCodeSet::contains(const Word& w) const {
  return std::binary_search(members_.begin(), members_.end(), w);
}

bool PrefixCodeSet::isPrefixCode(const std::vector<Word>& ws) {
  for (std::size_t i = 0; i < ws.size(); ++i)
    for (std::size_t j = 0; j < ws.size(); ++j)
      if (i != j && ws[i].isPrefixOf(ws[j])) return false;
  return true;
}

namespace {
void minimalCodeWalk(const Word& node, const WordPredicate& member, std::size_t maxLen,
                     std::vector<Word>& out) {
  if (member(node)) {
    out.push_back(node);  // subtree pruned: everything below has this prefix
    return;
  }
  if (node.size() == maxLen) return;
  minimalCodeWalk(node + Word("0"), member, maxLen, out);
  minimalCodeWalk(node + Word("1"), member, maxLen, out);
}
}  // namespace

PrefixCodeSet minimalPrefixCode(const WordPredicate& member, std::size_t maxLen) {
  std::vector<Word> out;
  minimalCodeWalk(Word(), member, maxLen, out);
  return PrefixCodeSet(std::move(out));
}

std::optional<Word> shortestPrefixIn(const Word& y, const WordPredicate& member) {
  for (std::size_t n = 0; n <= y.size(); ++n) {
    Word p = y.prefix(n);
    if (member(p)) return p;
  }
  return std::nullopt;
}

std::vector<Word> allWordsOfLength(std::size_t n) {
  std::vector<Word> out;
  if (n > 30) throw std::invalid_argument("allWordsOfLength: too long to enumerate");
  out.reserve(std::size_t{1} << n);
  for (std::size_t v = 0; v < (std::size_t{1} << n); ++v) {
    std::string s(n, '0');
    for (std::size_t i = 0; i < n; ++i)
      if (v & (std::size_t{1} << (n - 1 - i))) s[i] = '1';
    out.push_back(Word(s));
  }
  return out;
}

std::vector<Word> allWordsUpTo(std::size_t maxLen) {
  std::vector<Word> out;
  for (std::size_t n = 0; n <= maxLen; ++n)
    for (auto& w : allWordsOfLength(n)) out.push_back(std::move(w));
  return out;
}

}  // namespace fpm
