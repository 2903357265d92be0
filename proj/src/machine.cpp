#include "fpm/machine.hpp"

#include <map>
#include <set>

namespace fpm {

char symChar(Sym s) {
  switch (s) {
    case Sym::Zero: return '0';
    case Sym::One: return '1';
    case Sym::Blank: return '_';
    case Sym::End: return '>';
  }
  return '?';
}

std::string rejectReasonName(RejectReason r) {
  switch (r) {
    case RejectReason::Timeout: return "timeout";
    case RejectReason::BalanceViolation: return "balanceViolation";
    case RejectReason::NoOutput: return "noOutput";
    case RejectReason::MalformedInput: return "malformedInput";
  }
  return "?";
}

namespace {

void validateTransition(const Transition& t, int stateCount, int tapeCount) {
  if (t.from < 0 || t.from >= stateCount || t.to < 0 || t.to >= stateCount)
    throw std::invalid_argument("transition: state out of range");
  if (static_cast<int>(t.reads.size()) != tapeCount ||
      static_cast<int>(t.writes.size()) != tapeCount ||
      static_cast<int>(t.moves.size()) != tapeCount)
    throw std::invalid_argument("transition: vector arity mismatch");
  for (int i = 0; i < tapeCount; ++i) {
    // Endmarkers are immovable: they are rewritten only onto themselves.
    if ((t.reads[i] == Sym::End) != (t.writes[i] == Sym::End))
      throw std::invalid_argument("transition: endmarker discipline violated");
  }
}

long long readKey(int state, const std::vector<Sym>& reads) {
  long long k = state;
  for (Sym s : reads) k = k * 4 + static_cast<int>(s);
  return k;
}

}  // namespace

void FlatBody::validate() const {
  if (stateCount < 1 || tapeCount < 1) throw std::invalid_argument("FlatBody: empty machine");
  if (startState < 0 || startState >= stateCount || haltState < 0 || haltState >= stateCount)
    throw std::invalid_argument("FlatBody: start/halt out of range");
  std::set<long long> seen;
  for (const auto& t : transitions) {
    validateTransition(t, stateCount, tapeCount);
    if (!seen.insert(readKey(t.from, t.reads)).second)
      throw std::invalid_argument("FlatBody: nondeterministic transition table");
  }
}

void SeqBody::validate() const {
  if (steps.empty()) throw std::invalid_argument("SeqBody: empty step list");
  for (const auto& s : steps)
    if (s.atom == GenAtom::Ev && s.evC < 12)
      throw std::invalid_argument("SeqBody: ev constant must be >= 12");
}

bool TMProgram::operator==(const TMProgram& other) const {
  if (isFlat() != other.isFlat()) return false;
  if (isFlat()) {
    const FlatBody &a = flat(), &b = other.flat();
    auto tupA = std::tie(a.stateCount, a.tapeCount, a.startState, a.haltState);
    auto tupB = std::tie(b.stateCount, b.tapeCount, b.startState, b.haltState);
    if (tupA != tupB || a.transitions.size() != b.transitions.size()) return false;
    for (std::size_t i = 0; i < a.transitions.size(); ++i) {
      const Transition &x = a.transitions[i], &y = b.transitions[i];
      if (x.from != y.from || x.to != y.to || x.reads != y.reads || x.writes != y.writes ||
          x.moves != y.moves)
        return false;
    }
    return true;
  }
  return seq().steps == other.seq().steps;
}

namespace {

struct Tape {
  std::vector<Sym> cells{Sym::End};
  std::size_t head = 1;

  Sym read() {
    if (head >= cells.size()) cells.resize(head + 1, Sym::Blank);
    return cells[head];
  }
  void write(Sym s) { cells[head] = s; }
  bool move(Move m) {
    if (m == Move::Left) {
      if (head == 0) return false;
      --head;
    } else if (m == Move::Right) {
      ++head;
    }
    return true;
  }
};

struct FlatRunResult {
  std::optional<Word> output;
  RejectReason reason = RejectReason::NoOutput;
  unsigned long steps = 0;
};

/// Executes a flat body on explicit input under a step budget. Budgets above
/// the safety cap cannot run out honestly; hitting the cap there throws.
FlatRunResult runFlat(const FlatBody& body, const Word& input, const BigInt& budget) {
  std::vector<Tape> tapes(body.tapeCount);
  for (std::size_t i = 0; i < input.size(); ++i)
    tapes[0].cells.push_back(input.at(i) == '0' ? Sym::Zero : Sym::One);

  std::map<long long, const Transition*> table;
  for (const auto& t : body.transitions) table[readKey(t.from, t.reads)] = &t;

  bool budgetEnforceable = budget <= BigInt(kStepSafetyCap);
  unsigned long budgetSteps = budgetEnforceable ? budget.get_ui() : kStepSafetyCap;

  FlatRunResult r;
  int state = body.startState;
  std::vector<Sym> reads(body.tapeCount);
  while (state != body.haltState) {
    if (r.steps >= budgetSteps) {
      if (budgetEnforceable) {
        r.reason = RejectReason::Timeout;
        return r;
      }
      throw std::runtime_error("runCounted: step safety cap exceeded");
    }
    for (int i = 0; i < body.tapeCount; ++i) reads[i] = tapes[i].read();
    auto it = table.find(readKey(state, reads));
    if (it == table.end()) {
      r.reason = RejectReason::NoOutput;  // stuck without signalling output
      return r;
    }
    const Transition& t = *it->second;
    for (int i = 0; i < body.tapeCount; ++i) tapes[i].write(t.writes[i]);
    for (int i = 0; i < body.tapeCount; ++i) {
      if (!tapes[i].move(t.moves[i])) {
        r.reason = RejectReason::NoOutput;  // attempted to cross an endmarker
        return r;
      }
    }
    state = t.to;
    ++r.steps;
  }
  const Tape& out = tapes[body.tapeCount - 1];
  std::string y;
  for (std::size_t i = 1; i < out.cells.size(); ++i) {
    if (out.cells[i] == Sym::Zero) y += '0';
    else if (out.cells[i] == Sym::One) y += '1';
    else break;
  }
  r.output = Word(y);
  return r;
}

struct BodyRunResult {
  std::optional<RunWord> output;
  RejectReason reason = RejectReason::NoOutput;
  unsigned long steps = 0;
};

constexpr std::size_t kExplicitCap = 1 << 22;

BodyRunResult runBody(const TMProgram& prog, const RunWord& input, const BigInt& budget) {
  BodyRunResult r;
  if (prog.isFlat()) {
    auto w = input.toWord(kExplicitCap);
    if (!w) throw std::runtime_error("runCounted: input too large to materialize");
    FlatRunResult f = runFlat(prog.flat(), *w, budget);
    r.reason = f.reason;
    r.steps = f.steps;
    if (f.output) r.output = RunWord(*f.output);
    return r;
  }
  // Composite body: apply the generator steps in order; each application is
  // charged 1 + |in| + |out|.
  RunWord value = input;
  BigInt cost = 0;
  for (const SeqStep& s : prog.seq().steps) {
    auto next = detail::applyGenAtom(s.atom, s.evC, value);
    if (!next) {
      r.reason = RejectReason::NoOutput;
      return r;
    }
    cost += 1 + value.size() + next->size();
    if (cost > budget) {
      r.reason = RejectReason::Timeout;
      return r;
    }
    value = std::move(*next);
  }
  r.steps = cost.fits_ulong_p() ? cost.get_ui() : kStepSafetyCap;
  r.output = std::move(value);
  return r;
}

}  // namespace

RunOutcome runCounted(const PolyProgram& w, const RunWord& x) {
  RunOutcome out;
  BigInt inputLen = x.size();
  BigInt exec = counterBudget(w.bound, inputLen).exec;

  BigInt padCount = 0;
  RunWord core = x;
  if (w.padDepth > 0) {
    auto block = splitPadBlock(x);
    if (!block) {
      out.reason = RejectReason::MalformedInput;
      return out;
    }
    padCount = block->h;
    core = block->rest;
  }

  BodyRunResult r = runBody(w.v, core, exec);
  out.stepsUsed = r.steps;
  if (!r.output) {
    out.reason = r.reason;
    return out;
  }

  RunWord result = *r.output;
  if (w.padDepth > 0) {
    // Restore the stripped block in front of the body's output.
    auto yw = r.output->toWord(kExplicitCap);
    if (!yw) throw std::runtime_error("runCounted: padded body output too large");
    result = RunWord(Word(), padCount, Word("11") + *yw);
  }

  if (inputLen > evalBound(w.bound, result.size())) {
    out.reason = RejectReason::BalanceViolation;
    out.output.reset();
    return out;
  }
  out.output = std::move(result);
  return out;
}

RunOutcome runCounted(const PolyProgram& w, const Word& x) { return runCounted(w, RunWord(x)); }

// ---------------------------------------------------------------------------
// Serialization. TriWord layout: G(v) # bin(k) # bin(a) # bin(padDepth) with
// numbers in canonical MSB-first binary; G(v) starts with a body-kind flag
// (0 flat, 1 composite), then unary-coded counts and indices U(n) = 1^n 0
// and two-bit symbol/move fields. See the README for the field-by-field
// layout.
// ---------------------------------------------------------------------------

namespace {

void putUnary(std::string& s, unsigned long n) {
  s.append(n, '1');
  s += '0';
}

std::string binStr(const BigInt& v) { return v.get_str(2); }

const char* symBits(Sym s) {
  switch (s) {
    case Sym::Zero: return "00";
    case Sym::One: return "01";
    case Sym::Blank: return "10";
    case Sym::End: return "11";
  }
  return "00";
}

const char* moveBits(Move m) {
  switch (m) {
    case Move::Left: return "00";
    case Move::Stay: return "01";
    case Move::Right: return "10";
  }
  return "00";
}

struct BitReader {
  const std::string& s;
  std::size_t pos = 0;
  bool fail = false;

  char next() {
    if (pos >= s.size()) {
      fail = true;
      return '0';
    }
    return s[pos++];
  }
  unsigned long unary() {
    unsigned long n = 0;
    while (!fail && next() == '1') ++n;
    return n;
  }
  bool done() const { return pos == s.size(); }
};

std::optional<Sym> symFromBits(char a, char b) {
  if (a == '0' && b == '0') return Sym::Zero;
  if (a == '0' && b == '1') return Sym::One;
  if (a == '1' && b == '0') return Sym::Blank;
  return Sym::End;
}

std::optional<Move> moveFromBits(char a, char b) {
  if (a == '0' && b == '0') return Move::Left;
  if (a == '0' && b == '1') return Move::Stay;
  if (a == '1' && b == '0') return Move::Right;
  return std::nullopt;
}

std::string encodeBody(const TMProgram& prog) {
  std::string g;
  if (prog.isFlat()) {
    const FlatBody& b = prog.flat();
    g += '0';
    putUnary(g, b.stateCount);
    putUnary(g, b.tapeCount);
    putUnary(g, b.startState);
    putUnary(g, b.haltState);
    putUnary(g, b.transitions.size());
    for (const auto& t : b.transitions) {
      putUnary(g, t.from);
      for (Sym s : t.reads) g += symBits(s);
      putUnary(g, t.to);
      for (Sym s : t.writes) g += symBits(s);
      for (Move m : t.moves) g += moveBits(m);
    }
  } else {
    const SeqBody& b = prog.seq();
    g += '1';
    putUnary(g, b.steps.size());
    for (const auto& st : b.steps) {
      putUnary(g, static_cast<unsigned long>(st.atom));
      if (st.atom == GenAtom::Ev) putUnary(g, st.evC);
    }
  }
  return g;
}

std::optional<TMProgram> decodeBody(const std::string& g) {
  BitReader rd{g};
  char kind = rd.next();
  if (rd.fail) return std::nullopt;
  if (kind == '0') {
    FlatBody b;
    b.stateCount = static_cast<int>(rd.unary());
    b.tapeCount = static_cast<int>(rd.unary());
    b.startState = static_cast<int>(rd.unary());
    b.haltState = static_cast<int>(rd.unary());
    unsigned long nTrans = rd.unary();
    if (rd.fail) return std::nullopt;
    for (unsigned long i = 0; i < nTrans; ++i) {
      Transition t;
      t.from = static_cast<int>(rd.unary());
      for (int j = 0; j < b.tapeCount; ++j) {
        auto s = symFromBits(rd.next(), rd.next());
        if (!s) return std::nullopt;
        t.reads.push_back(*s);
      }
      t.to = static_cast<int>(rd.unary());
      for (int j = 0; j < b.tapeCount; ++j) {
        auto s = symFromBits(rd.next(), rd.next());
        if (!s) return std::nullopt;
        t.writes.push_back(*s);
      }
      for (int j = 0; j < b.tapeCount; ++j) {
        auto m = moveFromBits(rd.next(), rd.next());
        if (!m) return std::nullopt;
        t.moves.push_back(*m);
      }
      if (rd.fail) return std::nullopt;
      b.transitions.push_back(std::move(t));
    }
    if (rd.fail || !rd.done()) return std::nullopt;
    try {
      b.validate();
    } catch (const std::invalid_argument&) {
      return std::nullopt;
    }
    return TMProgram(std::move(b));
  }
  if (kind != '1') return std::nullopt;
  SeqBody b;
  unsigned long nSteps = rd.unary();
  if (rd.fail) return std::nullopt;
  for (unsigned long i = 0; i < nSteps; ++i) {
    unsigned long id = rd.unary();
    if (rd.fail || id > 7) return std::nullopt;
    SeqStep st;
    st.atom = static_cast<GenAtom>(id);
    if (st.atom == GenAtom::Ev) st.evC = rd.unary();
    b.steps.push_back(st);
  }
  if (rd.fail || !rd.done()) return std::nullopt;
  try {
    b.validate();
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  return TMProgram(std::move(b));
}

std::optional<BigInt> parseBin(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s.size() > 1 && s[0] == '0') return std::nullopt;  // canonical form only
  BigInt v;
  if (mpz_set_str(v.get_mpz_t(), s.c_str(), 2) != 0) return std::nullopt;
  return v;
}

}  // namespace

Word serializeProgram(const PolyProgram& w) {
  std::string tri = encodeBody(w.v);
  tri += '#';
  tri += binStr(w.bound.k);
  tri += '#';
  tri += binStr(w.bound.a);
  tri += '#';
  tri += binStr(BigInt(w.padDepth));
  return encode3(TriWord(tri));
}

std::optional<PolyProgram> parseProgram(const Word& u) {
  auto tri = decode3(u);
  if (!tri) return std::nullopt;
  std::vector<std::string> parts{""};
  for (std::size_t i = 0; i < tri->size(); ++i) {
    if (tri->at(i) == '#') parts.emplace_back();
    else parts.back() += tri->at(i);
  }
  if (parts.size() != 4) return std::nullopt;
  auto body = decodeBody(parts[0]);
  auto k = parseBin(parts[1]);
  auto a = parseBin(parts[2]);
  auto d = parseBin(parts[3]);
  if (!body || !k || !a || !d) return std::nullopt;
  if (*k < 1 || *a < 12 || !d->fits_ulong_p()) return std::nullopt;
  return PolyProgram(std::move(*body), PolyBound(*k, *a), d->get_ui());
}

// ---------------------------------------------------------------------------
// Choice-sequence machines.
// ---------------------------------------------------------------------------

void ChoiceProgram::validate() const {
  if (stateCount < 1 || tapeCount < 1) throw std::invalid_argument("ChoiceProgram: empty");
  if (startState < 0 || startState >= stateCount || acceptState < 0 ||
      acceptState >= stateCount)
    throw std::invalid_argument("ChoiceProgram: start/accept out of range");
  std::map<long long, int> multiplicity;
  for (const auto& t : transitions) {
    validateTransition(t, stateCount, tapeCount);
    if (++multiplicity[readKey(t.from, t.reads)] > 2)
      throw std::invalid_argument("ChoiceProgram: more than binary nondeterminism");
  }
}

ChoiceResult choiceRun(const ChoiceProgram& M, const Word& x, const Word& s) {
  std::vector<Tape> tapes(M.tapeCount);
  for (std::size_t i = 0; i < x.size(); ++i)
    tapes[0].cells.push_back(x.at(i) == '0' ? Sym::Zero : Sym::One);

  std::map<long long, std::vector<const Transition*>> table;
  for (const auto& t : M.transitions) table[readKey(t.from, t.reads)].push_back(&t);

  BigInt cap = evalBound(M.bound, BigInt(x.size() + s.size()));
  unsigned long maxSteps =
      cap > BigInt(kStepSafetyCap) ? kStepSafetyCap : cap.get_ui();

  int state = M.startState;
  std::size_t sPos = 0;
  std::vector<Sym> reads(M.tapeCount);
  for (unsigned long step = 0; step < maxSteps; ++step) {
    if (state == M.acceptState) return ChoiceResult::Accept;
    for (int i = 0; i < M.tapeCount; ++i) reads[i] = tapes[i].read();
    auto it = table.find(readKey(state, reads));
    if (it == table.end()) return ChoiceResult::Reject;
    const Transition* chosen = it->second[0];
    if (it->second.size() == 2) {
      if (sPos >= s.size()) return ChoiceResult::Reject;  // choices exhausted
      chosen = it->second[s.at(sPos) == '0' ? 0 : 1];
      ++sPos;
    }
    for (int i = 0; i < M.tapeCount; ++i) tapes[i].write(chosen->writes[i]);
    for (int i = 0; i < M.tapeCount; ++i)
      if (!tapes[i].move(chosen->moves[i])) return ChoiceResult::Reject;
    state = chosen->to;
  }
  return state == M.acceptState ? ChoiceResult::Accept : ChoiceResult::Reject;
}

// ---------------------------------------------------------------------------
// WordFunction helpers.
// ---------------------------------------------------------------------------

WordFunction wordFunctionOf(const PolyProgram& w, std::string name) {
  WordFunction f;
  f.bound = w.bound;
  f.provenance = Provenance::ProgramBacked;
  f.name = std::move(name);
  f.eval = [w](const Word& x) -> std::optional<Word> {
    RunOutcome r = runCounted(w, x);
    if (!r.ok()) return std::nullopt;
    auto y = r.output->toWord(1 << 20);
    if (!y) throw std::runtime_error("wordFunctionOf: output too large");
    return y;
  };
  return f;
}

WordFunction fM(const ChoiceProgram& M) {
  WordFunction f;
  f.bound = M.bound;
  f.provenance = Provenance::ProgramBacked;
  f.name = "fM";
  f.eval = [M](const Word& t) -> std::optional<Word> {
    // Pairing convention: encode3(x) 11 s.
    std::string xbits;
    std::size_t i = 0;
    bool closed = false;
    for (; i + 1 < t.size(); i += 2) {
      char a = t.at(i), b = t.at(i + 1);
      if (a == '0') {
        xbits += (b == '0') ? '0' : '1';
      } else if (b == '1') {
        i += 2;
        closed = true;
        break;
      } else {
        return std::nullopt;  // block "10"
      }
    }
    if (!closed) return std::nullopt;
    Word x(xbits);
    Word s(t.str().substr(i));
    if (choiceRun(M, x, s) != ChoiceResult::Accept) return std::nullopt;
    return x;
  };
  return f;
}

WordFunction composeWF(const WordFunction& g, const WordFunction& f) {
  WordFunction h;
  h.bound = composeBounds(f.bound, g.bound);
  h.provenance = Provenance::CombinatorBuilt;
  h.name = g.name + "*" + f.name;
  auto fe = f.eval;
  auto ge = g.eval;
  h.eval = [fe, ge](const Word& x) -> std::optional<Word> {
    auto mid = fe(x);
    if (!mid) return std::nullopt;
    return ge(*mid);
  };
  return h;
}

WordFunction identityWF() {
  WordFunction f;
  f.bound = PolyBound(1, 12);
  f.name = "id";
  f.eval = [](const Word& x) -> std::optional<Word> { return x; };
  return f;
}

bool balancedAt(const WordFunction& f, const Word& x) {
  auto y = f.eval(x);
  if (!y) return true;
  return BigInt(y->size()) <= evalBound(f.bound, BigInt(x.size())) &&
         BigInt(x.size()) <= evalBound(f.bound, BigInt(y->size()));
}

}  // namespace fpm
