#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msum/intset.hpp"
#include "msum/linearity.hpp"

namespace msum {

/// Initial segment a_1 < ... < a_M of the sequence together with the
/// threshold index n of the two hypotheses.
class SequencePrefix {
 public:
  SequencePrefix(std::vector<Value> a, Value n);

  /// First `6n - 4` elements of `s` (throws if s is too short).
  static SequencePrefix leading(const IntSet& s, Value n);

  std::span<const Value> values() const { return a_; }
  Value n() const { return n_; }
  std::size_t length() const { return a_.size(); }
  /// 6n - 4, the prefix length the combinatorial construction consumes.
  std::size_t required_length() const { return static_cast<std::size_t>(6 * n_ - 4); }
  /// a_i for 1-based i.
  Value at(std::size_t i) const { return a_[i - 1]; }
  Value a_n() const { return at(static_cast<std::size_t>(n_)); }

  IntSet as_set() const { return IntSet(a_); }

 private:
  std::vector<Value> a_;
  Value n_;
};

struct ConditionReport {
  /// First hypothesis checked for m in (n, M].
  std::size_t c1_first = 0;
  std::size_t c1_last = 0;
  /// Indices m whose a_m lacks two representations from the prefix.
  std::vector<std::size_t> c1_violations;
  /// Second hypothesis checked for values in (a_n, c2_checked_max].
  Value c2_checked_max = 0;
  /// Values a > a_n with two four-distinct representations that are missing.
  std::vector<Value> c2_violations;
  bool passed = false;
};

ConditionReport check_conditions(const SequencePrefix& prefix);

/// d, a, b, a+d, b+d pairwise distinct members; every multiple of
/// k = a + b + d follows.
struct Lemma1Witness {
  Value d = 0;
  Value a = 0;
  Value b = 0;
  Value k = 0;

  std::array<Value, 5> quintuple() const { return {d, a, b, a + d, b + d}; }
  bool operator==(const Lemma1Witness&) const = default;
};

Lemma1Witness make_witness(Value d, Value a, Value b);

/// Throws WitnessError naming the first failed membership or coincidence,
/// and ConditionViolation when k <= a_n_value.
void verify_witness(const Lemma1Witness& w, const IntSet& ambient, Value a_n_value);

/// All witnesses with a < b in lexicographic (d, a, b) order, k > a_n_value.
std::vector<Lemma1Witness> lemma1_search(const IntSet& ambient, Value a_n_value,
                                         std::size_t limit = 1000);

/// One derived value of the induction: value = p1 + q1 = p2 + q2.
struct DerivationStep {
  Value m = 0;
  Value value = 0;
  std::array<Value, 2> first{};
  std::array<Value, 2> second{};
  bool distinct = false;
  bool present = false;
  std::string identity;
};

struct Lemma1Trace {
  Lemma1Witness witness;
  std::vector<DerivationStep> steps;
  /// m * k confirmed present, ascending.
  std::vector<Value> confirmed_multiples;
  bool ok = true;
  std::optional<DerivationStep> failure;
};

/// Replays the induction m*k -> (m+1)*k against the concrete set while every
/// value of step m stays within the horizon.
Lemma1Trace lemma1_multiples(const IntSet& ambient, const Lemma1Witness& w, Value a_n_value);

struct Lemma2Input {
  Value d1 = 0;
  Value d2 = 0;
  Value x = 0;
  Value y = 0;
};

enum class Lemma2Case { i, ii, iii, iv };
const char* to_string(Lemma2Case c);

struct Lemma2Resolution {
  Lemma2Case which = Lemma2Case::i;
  /// True when the (ii)/(iv) coincidence forced b = 2 * d2.
  bool doubled_b = false;
  /// Input after ordering so that d1 < d2.
  Lemma2Input ordered;
  Lemma1Witness witness;
};

Lemma2Resolution lemma2_resolve(Lemma2Input input, const IntSet& ambient, Value a_n_value);

/// t = x + z = y + w with x < y <= w < z.
struct TripleChoice {
  Value t = 0;
  Value x = 0;
  Value y = 0;
  Value w = 0;
  Value z = 0;
};

struct AlternativeRecord {
  Value d = 0;
  int tag = 0;  // 1..6
  Value r = 0;
  Value s = 0;
  Value t = 0;
};

struct PartOneTrace {
  std::size_t M = 0;
  std::vector<Value> I;
  std::vector<Value> J;
  std::vector<TripleChoice> T;
  /// Number of T-sets containing each value of I.
  std::map<Value, std::size_t> multiplicity;
  std::vector<Value> D;
  std::vector<AlternativeRecord> alt;
  /// d -> x with S_d = {x, x + d}.
  std::map<Value, Value> S;
  std::optional<Lemma1Witness> direct_witness;
  std::optional<std::pair<Value, Value>> collision;
  std::optional<Lemma2Resolution> lemma2;
  Value k = 0;
};

/// Runs the combinatorial construction on the first 6n - 4 prefix elements.
PartOneTrace part_one(const SequencePrefix& prefix);

struct PeriodStep {
  Value r = 0;
  Value x = 0;
  Value s = 0;
  Value c = 0;
  Value k_next = 0;
};

struct MinimalPeriodTrace {
  Value k0 = 0;
  std::vector<PeriodStep> steps;
  Value k_final = 0;
};

/// Shrinks k0 to gcd(r, k) while an element x in (N0, B - k * min_window] of
/// residue r != 0 has a partner x + s*k in the set.
MinimalPeriodTrace part_two(const IntSet& ambient, Value k0, Value n0,
                            Value min_window = kDefaultMinWindow);

struct ExtractionResult {
  ConditionReport conditions;
  PartOneTrace part_one;
  Lemma1Trace lemma1;
  MinimalPeriodTrace part_two;
  LinearityResult linearity;
  Value k = 0;
  /// detect_linear certified k_final and the construction's k is a multiple of it.
  bool consistent = false;
};

/// check_conditions -> part_one -> Lemma-1 replay -> part_two, cross-checked
/// against detect_linear on the ambient set.
ExtractionResult extract_modulus(const SequencePrefix& prefix, const IntSet& ambient,
                                 Value min_window = kDefaultMinWindow);

}  // namespace msum
