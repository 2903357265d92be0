#ifndef FPM_MACHINE_HPP
#define FPM_MACHINE_HPP

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fpm/bounds.hpp"
#include "fpm/runword.hpp"
#include "fpm/word.hpp"

namespace fpm {

enum class Sym : unsigned char { Zero, One, Blank, End };
enum class Move : unsigned char { Left, Stay, Right };

char symChar(Sym s);

struct Transition {
  int from;
  std::vector<Sym> reads;
  int to;
  std::vector<Sym> writes;
  std::vector<Move> moves;
};

/// A plain multi-tape Turing program. Every tape has a left endmarker; the
/// input occupies tape 0 and the output is read off the last tape when the
/// halt state is reached. Halting anywhere else leaves the function
/// undefined at that input.
struct FlatBody {
  int stateCount = 1;
  int tapeCount = 1;
  int startState = 0;
  int haltState = 0;
  std::vector<Transition> transitions;

  void validate() const;  // determinism, index ranges, endmarker discipline
};

/// Generator atoms available to composite (wrapper) programs. Composite
/// bodies execute their steps in sequence; they exist so that words over
/// the generating set can be compiled back into programs without
/// synthesizing flat transition tables.
enum class GenAtom : unsigned char {
  Pi0,       // prepend 0
  Pi1,       // prepend 1
  Pi1Drop,   // drop one leading symbol
  Expand,
  Reexpand,
  Contr,
  Recontr,
  Ev,        // restricted universal evaluation at q(n) = c n^2 + c
};

struct SeqStep {
  GenAtom atom;
  unsigned long evC = 12;  // only meaningful for Ev
  bool operator==(const SeqStep&) const = default;
};

struct SeqBody {
  std::vector<SeqStep> steps;  // execution order
  void validate() const;
};

struct TMProgram {
  std::variant<FlatBody, SeqBody> body;

  TMProgram() : body(FlatBody{}) {}
  explicit TMProgram(FlatBody b) : body(std::move(b)) {}
  explicit TMProgram(SeqBody b) : body(std::move(b)) {}

  bool isFlat() const { return std::holds_alternative<FlatBody>(body); }
  const FlatBody& flat() const { return std::get<FlatBody>(body); }
  const SeqBody& seq() const { return std::get<SeqBody>(body); }

  bool operator==(const TMProgram& other) const;
};

/// A Turing program together with its bounding polynomial and padding depth;
/// the unit the counted machine runs and the serializer round-trips.
struct PolyProgram {
  TMProgram v;
  PolyBound bound;
  unsigned long padDepth = 0;

  PolyProgram(TMProgram v_, PolyBound b, unsigned long d = 0)
      : v(std::move(v_)), bound(std::move(b)), padDepth(d) {
    if (bound.a < 12) throw std::invalid_argument("PolyProgram: bound.a >= 12 required");
  }

  bool operator==(const PolyProgram&) const = default;
};

enum class RejectReason { Timeout, BalanceViolation, NoOutput, MalformedInput };

std::string rejectReasonName(RejectReason r);

struct RunOutcome {
  std::optional<RunWord> output;  // engaged iff the run produced a result
  RejectReason reason = RejectReason::NoOutput;  // meaningful iff !output
  unsigned long stepsUsed = 0;

  bool ok() const { return output.has_value(); }
};

/// Hard ceiling on simulated steps; budgets beyond it cannot be enforced
/// honestly at desk scale, so exceeding it throws instead of reporting a
/// timeout that the semantics does not imply.
inline constexpr unsigned long kStepSafetyCap = 4'000'000;

/// Runs w on x under the counter discipline: at most
/// counterBudget(w.bound, n).exec steps, then the input-balance test
/// |x| <= evalBound(w.bound, |y|). With padDepth > 0 the input must parse as
/// 0^h 11 z; the budget is charged on the full padded length, the body runs
/// on z alone, and the block is restored in front of the output.
RunOutcome runCounted(const PolyProgram& w, const RunWord& x);
RunOutcome runCounted(const PolyProgram& w, const Word& x);

/// Bit-exact serialization code(v # k # a # padDepth); see the format notes
/// in the README. Round-trips through parseProgram.
Word serializeProgram(const PolyProgram& w);
std::optional<PolyProgram> parseProgram(const Word& u);

/// A nondeterministic acceptor with at most two transitions per
/// (state, read-vector); branch choices are resolved by a supplied choice
/// sequence, one bit per binary branch.
struct ChoiceProgram {
  int stateCount = 1;
  int tapeCount = 1;
  int startState = 0;
  int acceptState = 0;
  std::vector<Transition> transitions;  // <= 2 per (state, reads)
  PolyBound bound{1, 12};

  void validate() const;
};

enum class ChoiceResult { Accept, Reject };

/// Runs M on x resolving branches with s; rejects when s is exhausted at a
/// branch or the step cap evalBound(M.bound, |x|+|s|) runs out.
ChoiceResult choiceRun(const ChoiceProgram& M, const Word& x, const Word& s);

enum class Provenance { ProgramBacked, TableBacked, CombinatorBuilt };

/// The uniform interface every construction consumes and produces: an
/// evaluable partial function on binary words with a declared bounding
/// polynomial. domainHint, when set, yields representative domain words up
/// to a size parameter for functions whose domains are too sparse to find
/// by exhaustive scans (long program headers, padded blocks).
struct WordFunction {
  std::function<std::optional<Word>(const Word&)> eval;
  PolyBound bound{1, 12};
  Provenance provenance = Provenance::CombinatorBuilt;
  std::string name;
  std::function<std::vector<Word>(std::size_t)> domainHint;

  std::optional<Word> operator()(const Word& x) const { return eval(x); }
};

/// f backed by a counted program: defined where the run produces output.
WordFunction wordFunctionOf(const PolyProgram& w, std::string name);

/// The paired-input acceptor function of M: on encode3(x) 11 s it returns x
/// exactly when M accepts x with choice sequence s.
WordFunction fM(const ChoiceProgram& M);

/// g after f, with the composed bound.
WordFunction composeWF(const WordFunction& g, const WordFunction& f);

WordFunction identityWF();

/// Spot-check of the two-sided balance of f at x (vacuously true off the
/// domain).
bool balancedAt(const WordFunction& f, const Word& x);

namespace detail {
/// Semantics of one generator atom on a structured word; defined in the
/// evaluation unit (the Ev atom closes the loop back to the universal
/// evaluator) and used by runCounted for composite bodies.
std::optional<RunWord> applyGenAtom(GenAtom atom, unsigned long evC, const RunWord& t);
}  // namespace detail

}  // namespace fpm

#endif
