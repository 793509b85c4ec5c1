#include "msum/schmerl.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "msum/errors.hpp"

namespace msum {

namespace {

std::string str(Value v) { return std::to_string(v); }

void require_length(const SequencePrefix& prefix) {
  if (prefix.length() < prefix.required_length()) {
    throw ConditionViolation("prefix_length", "prefix has " + std::to_string(prefix.length()) +
                                                  " elements, 6n-4 = " +
                                                  std::to_string(prefix.required_length()) +
                                                  " required");
  }
}

}  // namespace

SequencePrefix::SequencePrefix(std::vector<Value> a, Value n) : a_(std::move(a)), n_(n) {
  if (n_ < 1) throw InputError("n must be >= 1");
  if (a_.size() < static_cast<std::size_t>(n_)) throw InputError("prefix shorter than n");
  Value prev = 0;
  for (Value v : a_) {
    if (v <= prev) throw InputError("prefix must be strictly increasing positive integers");
    prev = v;
  }
}

SequencePrefix SequencePrefix::leading(const IntSet& s, Value n) {
  if (n < 1) throw InputError("n must be >= 1");
  const auto want = static_cast<std::size_t>(6 * n - 4);
  if (s.size() < want) {
    throw ConditionViolation("prefix_length", "set has " + std::to_string(s.size()) +
                                                  " elements, 6n-4 = " + std::to_string(want) +
                                                  " required");
  }
  return SequencePrefix(std::vector<Value>(s.elements().begin(), s.elements().begin() + static_cast<std::ptrdiff_t>(want)), n);
}

// ---------------------------------------------------------------------------
// Hypotheses

ConditionReport check_conditions(const SequencePrefix& prefix) {
  require_length(prefix);
  const IntSet set = prefix.as_set();
  const SumProfile profile(set);
  const auto n = static_cast<std::size_t>(prefix.n());

  ConditionReport report;
  report.c1_first = n + 1;
  report.c1_last = prefix.length();
  for (std::size_t m = n + 1; m <= prefix.length(); ++m) {
    if (profile.count(prefix.at(m)) < 2) report.c1_violations.push_back(m);
  }

  report.c2_checked_max = prefix.at(prefix.length());
  for (Value a = prefix.a_n() + 1; a <= report.c2_checked_max; ++a) {
    if (profile.strict_count(a) >= 2 && !set.contains(a)) report.c2_violations.push_back(a);
  }
  report.passed = report.c1_violations.empty() && report.c2_violations.empty();
  return report;
}

// ---------------------------------------------------------------------------
// Lemma 1

Lemma1Witness make_witness(Value d, Value a, Value b) { return {d, a, b, a + b + d}; }

void verify_witness(const Lemma1Witness& w, const IntSet& ambient, Value a_n_value) {
  static constexpr const char* kNames[5] = {"d", "a", "b", "a+d", "b+d"};
  const auto q = w.quintuple();
  if (w.k != w.a + w.b + w.d) throw WitnessError("k != a+b+d for k=" + str(w.k));
  for (std::size_t i = 0; i < q.size(); ++i) {
    for (std::size_t j = i + 1; j < q.size(); ++j) {
      if (q[i] == q[j]) {
        throw WitnessError(std::string("distinctness: ") + kNames[i] + " = " + kNames[j] + " = " +
                           str(q[i]));
      }
    }
  }
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (!ambient.contains(q[i])) {
      throw WitnessError(std::string("membership: ") + kNames[i] + " = " + str(q[i]) +
                         " is not in the set");
    }
  }
  if (w.k <= a_n_value) {
    throw ConditionViolation("lemma1_threshold", "k = " + str(w.k) + " <= a_n = " + str(a_n_value));
  }
}

std::vector<Lemma1Witness> lemma1_search(const IntSet& ambient, Value a_n_value, std::size_t limit) {
  std::vector<Lemma1Witness> out;
  const auto e = ambient.elements();
  for (Value d : e) {
    for (std::size_t i = 0; i < e.size(); ++i) {
      const Value a = e[i];
      if (a == d || !ambient.contains(a + d)) continue;
      for (std::size_t j = i + 1; j < e.size(); ++j) {
        const Value b = e[j];
        if (b == d || b == a + d || !ambient.contains(b + d)) continue;
        if (a + b + d <= a_n_value) continue;
        out.push_back(make_witness(d, a, b));
        if (out.size() >= limit) return out;
      }
    }
  }
  return out;
}

namespace {

DerivationStep derive(const IntSet& ambient, Value m, Value p1, Value q1, Value p2, Value q2,
                      std::string identity) {
  DerivationStep step;
  step.m = m;
  step.value = p1 + q1;
  step.first = {p1, q1};
  step.second = {p2, q2};
  std::array<Value, 4> all{p1, q1, p2, q2};
  std::sort(all.begin(), all.end());
  step.distinct = std::adjacent_find(all.begin(), all.end()) == all.end() && p2 + q2 == step.value;
  step.present = ambient.contains(step.value) && ambient.contains(p1) && ambient.contains(q1) &&
                 ambient.contains(p2) && ambient.contains(q2);
  step.identity = std::move(identity);
  return step;
}

}  // namespace

Lemma1Trace lemma1_multiples(const IntSet& ambient, const Lemma1Witness& w, Value a_n_value) {
  verify_witness(w, ambient, a_n_value);
  const Value a = w.a, b = w.b, d = w.d, k = w.k;
  const Value top = ambient.horizon();

  Lemma1Trace trace;
  trace.witness = w;
  auto record = [&](DerivationStep step) {
    const bool good = step.distinct && step.present;
    trace.steps.push_back(step);
    if (!good) {
      trace.ok = false;
      trace.failure = std::move(step);
    }
    return good;
  };

  if (!record(derive(ambient, 1, a + d, b, b + d, a, "k = [a+d]+b = [b+d]+a"))) return trace;
  trace.confirmed_multiples.push_back(k);

  for (Value m = 1; m * k + std::max(a, b) + d <= top; ++m) {
    const Value mk = m * k;
    const std::string at = " (m=" + str(m) + ")";
    DerivationStep base =
        m == 1 ? derive(ambient, m, k, d, a + d, b + d, "k+d = k+d = [a+d]+[b+d]")
               : derive(ambient, m, mk - k + b + d, a + d, mk - k + a + d, b + d,
                        "mk+d = [(m-1)k+b+d]+[a+d] = [(m-1)k+a+d]+[b+d]" + at);
    if (!record(std::move(base))) return trace;
    if (!record(derive(ambient, m, mk + d, a, mk, a + d, "mk+a+d = [mk+d]+a = mk+[a+d]" + at))) {
      return trace;
    }
    if (!record(derive(ambient, m, mk + d, b, mk, b + d, "mk+b+d = [mk+d]+b = mk+[b+d]" + at))) {
      return trace;
    }
    if (mk + k > top) break;
    if (!record(derive(ambient, m, mk + a + d, b, mk + b + d, a,
                       "(m+1)k = [mk+a+d]+b = [mk+b+d]+a" + at))) {
      return trace;
    }
    trace.confirmed_multiples.push_back(mk + k);
  }
  return trace;
}

// ---------------------------------------------------------------------------
// Lemma 2

const char* to_string(Lemma2Case c) {
  switch (c) {
    case Lemma2Case::i: return "i";
    case Lemma2Case::ii: return "ii";
    case Lemma2Case::iii: return "iii";
    case Lemma2Case::iv: return "iv";
  }
  return "?";
}

Lemma2Resolution lemma2_resolve(Lemma2Input in, const IntSet& ambient, Value a_n_value) {
  if (in.x == in.d1 || in.d1 == in.d2 || in.d2 == in.y) {
    throw ConditionViolation("lemma2_hypothesis", "need x != d1 != d2 != y");
  }
  const std::array<Value, 10> needed{in.d1, 2 * in.d1, in.x, in.x + in.d1, in.x + 2 * in.d1,
                                     in.d2, 2 * in.d2, in.y, in.y + in.d2, in.y + 2 * in.d2};
  for (Value v : needed) {
    if (!ambient.contains(v)) {
      throw ConditionViolation("lemma2_hypothesis", str(v) + " is not in the set");
    }
  }
  if (in.d1 + in.d2 <= a_n_value) {
    throw ConditionViolation("lemma2_hypothesis", "d1+d2 <= a_n = " + str(a_n_value));
  }
  if (in.d1 > in.d2) in = Lemma2Input{in.d2, in.d1, in.y, in.x};

  const Value d1 = in.d1, d2 = in.d2, x = in.x, y = in.y;
  Lemma2Resolution res;
  res.ordered = in;
  if (x + d1 == y + d2) {
    res.which = Lemma2Case::i;
    res.witness = make_witness(x + d1, d1, d2);
  } else if (x + d1 == y) {
    res.which = Lemma2Case::ii;
    res.doubled_b = d2 == x + 2 * d1;
    res.witness = make_witness(y, d1, res.doubled_b ? 2 * d2 : d2);
  } else if (x == y + d2) {
    res.which = Lemma2Case::iii;
    res.witness = make_witness(x, d1, d2);
  } else if (x == y) {
    res.which = Lemma2Case::iv;
    res.doubled_b = d2 == d1 + x;
    res.witness = make_witness(x, d1, res.doubled_b ? 2 * d2 : d2);
  } else {
    throw ConditionViolation("lemma2_intersection", "{x, x+d1} and {y, y+d2} are disjoint");
  }
  verify_witness(res.witness, ambient, a_n_value);
  return res;
}

// ---------------------------------------------------------------------------
// Part One

namespace {

int alternative(Value d, Value r, Value s, Value t) {
  const Value dd = 2 * d;
  if (r == dd && t == s + d) return 1;
  if (s == dd && t == r + d) return 2;
  if (t == dd && s == r + d) return 3;
  if (r != dd && s != dd && s != r + d) return 4;
  if (r != dd && t != dd && t != r + d) return 5;
  if (s != dd && t != dd && t != s + d) return 6;
  return 0;
}

Lemma1Witness direct_witness(int tag, Value d, Value r, Value s, Value t) {
  switch (tag) {
    case 4: return make_witness(d, r - d, s - d);
    case 5: return make_witness(d, r - d, t - d);
    default: return make_witness(d, s - d, t - d);
  }
}

}  // namespace

PartOneTrace part_one(const SequencePrefix& prefix) {
  require_length(prefix);
  const ConditionReport report = check_conditions(prefix);
  if (!report.passed) {
    throw ConditionViolation("conditions", std::to_string(report.c1_violations.size()) +
                                               " first-hypothesis and " +
                                               std::to_string(report.c2_violations.size()) +
                                               " second-hypothesis violations");
  }

  PartOneTrace trace;
  const std::size_t M = prefix.required_length();
  const auto n = static_cast<std::size_t>(prefix.n());
  const Value a_n = prefix.a_n();
  trace.M = M;
  for (std::size_t i = 1; i < M; ++i) trace.I.push_back(prefix.at(i));
  for (std::size_t j = n + 1; j <= M; ++j) trace.J.push_back(prefix.at(j));

  // Ambient set for every membership claim: a_1..a_M = I u {a_M}.
  std::vector<Value> head(trace.I);
  head.push_back(prefix.at(M));
  const IntSet ambient(head);

  std::map<Value, std::vector<Value>> containing;  // d -> sorted t with d in T_t
  for (Value t : trace.J) {
    std::vector<Value> mins;
    for (Value p : trace.I) {
      if (2 * p > t) break;
      if (ambient.contains(t - p)) {
        mins.push_back(p);
        if (mins.size() == 2) break;
      }
    }
    if (mins.size() < 2) {
      throw ConditionViolation("missing_T", "t = " + str(t) + " has fewer than two representations");
    }
    const TripleChoice choice{t, mins[0], mins[1], t - mins[1], t - mins[0]};
    trace.T.push_back(choice);
    for (Value v : {choice.x, choice.y, choice.z}) {
      ++trace.multiplicity[v];
      containing[v].push_back(t);
    }
  }
  for (const auto& [v, count] : trace.multiplicity) {
    if (count >= 3) trace.D.push_back(v);
  }

  for (Value d : trace.D) {
    const std::vector<Value>& ts = containing[d];
    int first_tag = 0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      for (std::size_t j = i + 1; j < ts.size(); ++j) {
        for (std::size_t l = j + 1; l < ts.size(); ++l) {
          const int tag = alternative(d, ts[i], ts[j], ts[l]);
          if (tag == 0) {
            throw ConditionViolation("alternatives", "no alternative holds for d = " + str(d));
          }
          if (first_tag == 0) first_tag = tag;
          if (tag >= 4) {
            trace.alt.push_back({d, tag, ts[i], ts[j], ts[l]});
            const Lemma1Witness w = direct_witness(tag, d, ts[i], ts[j], ts[l]);
            verify_witness(w, ambient, a_n);
            trace.direct_witness = w;
            trace.k = w.k;
            return trace;
          }
        }
      }
    }
    if (ts.size() >= 4) {
      throw ConditionViolation("quadruple_membership",
                               "d = " + str(d) + " lies in " + std::to_string(ts.size()) +
                                   " T-sets without a direct witness");
    }
    const Value r = ts[0], s = ts[1], t = ts[2];
    trace.alt.push_back({d, first_tag, r, s, t});
    const Value x = first_tag == 2 ? r - d : s - d;
    for (Value v : {2 * d, x, x + d, x + 2 * d}) {
      if (!ambient.contains(v)) {
        throw ConditionViolation("S_d", str(v) + " missing for d = " + str(d));
      }
    }
    if (x == d || x + d >= prefix.at(M)) {
      throw ConditionViolation("S_d", "bad pair {x, x+d} for d = " + str(d));
    }
    trace.S[d] = x;
  }

  const auto min_D = static_cast<std::size_t>(3 * prefix.n() - 2);
  if (trace.D.size() < min_D) {
    throw ConditionViolation("D_size", "|D| = " + std::to_string(trace.D.size()) + " < 3n-2 = " +
                                           std::to_string(min_D));
  }

  for (auto it1 = trace.S.begin(); it1 != trace.S.end() && !trace.collision; ++it1) {
    for (auto it2 = std::next(it1); it2 != trace.S.end(); ++it2) {
      const auto [d1, x] = *it1;
      const auto [d2, y] = *it2;
      if (x == y || x == y + d2 || x + d1 == y || x + d1 == y + d2) {
        trace.collision = std::make_pair(d1, d2);
        break;
      }
    }
  }
  if (!trace.collision) throw ConditionViolation("no_collision", "all S_d are pairwise disjoint");

  const auto [d1, d2] = *trace.collision;
  trace.lemma2 = lemma2_resolve({d1, d2, trace.S[d1], trace.S[d2]}, ambient, a_n);
  trace.k = trace.lemma2->witness.k;
  return trace;
}

// ---------------------------------------------------------------------------
// Part Two

namespace {

// c in [1, k) with c * r = gcd(r, k) (mod k).
Value gcd_multiplier(Value r, Value k) {
  Value old_r = r, cur_r = k;
  Value old_s = 1, cur_s = 0;
  while (cur_r != 0) {
    const Value q = old_r / cur_r;
    old_r = std::exchange(cur_r, old_r - q * cur_r);
    old_s = std::exchange(cur_s, old_s - q * cur_s);
  }
  Value c = old_s % k;
  if (c <= 0) c += k;
  return c;
}

}  // namespace

MinimalPeriodTrace part_two(const IntSet& ambient, Value k0, Value n0, Value min_window) {
  if (k0 < 1) throw InputError("k0 must be >= 1");
  const Value top = ambient.horizon();
  for (Value v = (n0 / k0 + 1) * k0; v <= top; v += k0) {
    if (!ambient.contains(v)) {
      throw InputError("multiple " + str(v) + " of k0 = " + str(k0) + " beyond N0 = " + str(n0) +
                       " is missing");
    }
  }

  MinimalPeriodTrace trace;
  trace.k0 = k0;
  Value k = k0;
  for (;;) {
    const Value limit = top - k * min_window;
    std::vector<Value> last(static_cast<std::size_t>(k), 0);  // largest element per residue
    for (Value e : ambient.elements()) last[static_cast<std::size_t>(e % k)] = e;

    std::optional<PeriodStep> step;
    for (Value x : ambient.elements()) {
      if (x <= n0) continue;
      if (x > limit) break;
      const Value r = x % k;
      if (r == 0 || last[static_cast<std::size_t>(r)] <= x) continue;
      Value s = 1;
      while (!ambient.contains(x + s * k)) ++s;
      const Value g = std::gcd(r, k);
      step = PeriodStep{r, x, s, gcd_multiplier(r, k), g};
      break;
    }
    if (!step) break;
    trace.steps.push_back(*step);
    k = step->k_next;
  }
  trace.k_final = k;
  return trace;
}

// ---------------------------------------------------------------------------
// Pipeline

ExtractionResult extract_modulus(const SequencePrefix& prefix, const IntSet& ambient,
                                 Value min_window) {
  const auto vals = prefix.values();
  if (ambient.size() < vals.size() ||
      !std::equal(vals.begin(), vals.end(), ambient.elements().begin())) {
    throw InputError("prefix is not an initial segment of the set");
  }

  ExtractionResult out;
  out.conditions = check_conditions(prefix);
  out.part_one = part_one(prefix);
  const Lemma1Witness w = out.part_one.direct_witness ? *out.part_one.direct_witness
                                                      : out.part_one.lemma2->witness;
  out.lemma1 = lemma1_multiples(ambient, w, prefix.a_n());

  const Value k1 = out.part_one.k;
  Value n0 = 0;
  for (Value v = k1; v <= ambient.horizon(); v += k1) {
    if (!ambient.contains(v)) n0 = v;
  }
  out.part_two = part_two(ambient, k1, n0, min_window);
  out.k = out.part_two.k_final;

  out.linearity = detect_linear(ambient, min_window);
  out.consistent = out.lemma1.ok && out.linearity.certificate &&
                   out.linearity.certificate->k == out.k && k1 % out.k == 0;
  return out;
}

}  // namespace msum
