#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "rummy/card.hpp"
#include "rummy/constructions.hpp"
#include "rummy/declare.hpp"
#include "rummy/meld.hpp"
#include "rummy/mindist.hpp"
#include "rummy/parallel.hpp"

namespace rummy {

/// A case resolved by the exact solver after the fast predicate failed.
struct Escalation {
  std::string id;
  int value = 0;  // worst min_dist over the wildcard suits tried
  bool passed = false;
};

struct CaseReport {
  std::string universe;
  std::uint64_t cases_enumerated = 0;
  std::uint64_t cases_passed = 0;
  std::vector<std::string> failures;
  std::uint64_t escalations = 0;
  std::vector<Escalation> escalated;
  std::map<std::string, std::int64_t> figures;

  bool consistent() const { return cases_passed + failures.size() == cases_enumerated; }
  bool passed() const { return failures.empty() && consistent(); }

  // Associative; chunk reports are merged in chunk order.
  void merge(const CaseReport& o) {
    cases_enumerated += o.cases_enumerated;
    cases_passed += o.cases_passed;
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    escalations += o.escalations;
    escalated.insert(escalated.end(), o.escalated.begin(), o.escalated.end());
    for (const auto& [k, v] : o.figures) figures[k] = figures.count(k) ? std::max(figures[k], v) : v;
  }
};

namespace detail {

inline std::string value_list(const std::vector<Value>& vs) {
  std::string out = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out += ',';
    out += value_token(vs[i]);
  }
  return out + "}";
}

inline std::string int_list(const std::vector<int>& xs) {
  std::string out = "{";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out + "}";
}

// Calls f(combination) for every k-subset of items, in lexicographic index order.
template <typename T, typename F>
void for_each_combination(const std::vector<T>& items, int k, F&& f) {
  std::vector<int> idx(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
  const int n = static_cast<int>(items.size());
  if (k > n) return;
  std::vector<T> pick(static_cast<std::size_t>(k));
  while (true) {
    for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = items[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    f(pick);
    int i = k - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
  }
}

template <typename T>
std::vector<T> without(const std::vector<T>& items, const std::vector<T>& drop) {
  std::vector<T> out;
  for (const T& x : items)
    if (std::find(drop.begin(), drop.end(), x) == drop.end()) out.push_back(x);
  return out;
}

inline int min_pairwise_gap(const std::vector<Value>& vs) {
  int best = kMaxPosition;
  for (std::size_t i = 0; i < vs.size(); ++i)
    for (std::size_t j = i + 1; j < vs.size(); ++j) best = std::min(best, gap(vs[i], vs[j]));
  return best;
}

}  // namespace detail

/// Every 4 distinct values hold a pair with gap at most 2, and 2 is attained.
inline CaseReport check_lemma1() {
  CaseReport r;
  r.universe = "4-subsets of the 13 values";
  std::vector<Value> values(kAllValues.begin(), kAllValues.end());
  int max_min = 0;
  std::int64_t extremal = 0;
  detail::for_each_combination(values, 4, [&](const std::vector<Value>& pick) {
    ++r.cases_enumerated;
    const int g = detail::min_pairwise_gap(pick);
    if (g > max_min) {
      max_min = g;
      extremal = 0;
    }
    if (g == max_min) ++extremal;
    if (g <= 2) ++r.cases_passed;
    else r.failures.push_back(detail::value_list(pick) + " min gap " + std::to_string(g));
  });
  r.figures["max_min_gap"] = max_min;
  r.figures["extremal_subsets"] = extremal;
  return r;
}

enum class SplitModel : std::uint8_t { Linear, Faithful };

inline const char* to_string(SplitModel m) {
  return m == SplitModel::Linear ? "paper" : "faithful";
}

inline constexpr std::uint64_t kLinearCases = 1108800;

namespace detail {

// Abstract values 1..12 on a line: one leftover value, then an ordered
// 2-group and three ordered 3-groups. A case passes when two different
// groups each hold a pair at linear gap <= 3.
inline CaseReport linear_chunk(int leftover, int pair_index) {
  CaseReport r;
  std::vector<int> rest;
  for (int x = 1; x <= 12; ++x)
    if (x != leftover) rest.push_back(x);
  std::vector<std::vector<int>> pairs;
  for_each_combination(rest, 2, [&](const std::vector<int>& p) { pairs.push_back(p); });
  const std::vector<int>& two = pairs[static_cast<std::size_t>(pair_index)];
  const std::vector<int> nine = without(rest, two);

  auto close_pair = [](const std::vector<int>& g) {
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (std::abs(g[i] - g[j]) - 1 <= 3) return true;
    return false;
  };
  for_each_combination(nine, 3, [&](const std::vector<int>& a) {
    const std::vector<int> six = without(nine, a);
    for_each_combination(six, 3, [&](const std::vector<int>& b) {
      const std::vector<int> c = without(six, b);
      ++r.cases_enumerated;
      const int groups = (close_pair(two) ? 1 : 0) + (close_pair(a) ? 1 : 0) + (close_pair(b) ? 1 : 0) +
                         (close_pair(c) ? 1 : 0);
      if (groups >= 2) {
        ++r.cases_passed;
      } else {
        r.failures.push_back("leftover=" + std::to_string(leftover) + " groups=" + int_list(two) + int_list(a) +
                             int_list(b) + int_list(c));
      }
    });
  });
  return r;
}

// One concrete 3-3-3-2 case: group g goes to suit g; the duplicate value v is
// held in suits vs[0], vs[1].
struct SplitCase3332 {
  Value wild;
  Value dup;
  std::array<std::vector<Value>, kNumSuits> groups;
  std::array<Suit, 2> vs;

  std::string id() const {
    std::string out = "wcj=" + value_token(wild) + " v=" + value_token(dup);
    for (int s = 0; s < kNumSuits; ++s) {
      out += ' ';
      out += suit_letter(suit_from_index(s));
      out += value_list(groups[static_cast<std::size_t>(s)]);
    }
    out += " v-suits=";
    out += suit_letter(vs[0]);
    out += suit_letter(vs[1]);
    return out;
  }

  Hand hand() const {
    std::vector<Card> cards;
    for (int s = 0; s < kNumSuits; ++s)
      for (Value x : groups[static_cast<std::size_t>(s)]) cards.push_back(Card::natural(x, suit_from_index(s)));
    cards.push_back(Card::natural(dup, vs[0]));
    cards.push_back(Card::natural(dup, vs[1]));
    return Hand::from_cards(std::move(cards));
  }
};

inline std::uint32_t cells(Value x) {
  std::uint32_t m = 0;
  for (int p : positions(x)) m |= 1u << p;
  return m;
}

// Two length-5 windows, each over >= 2 group cards of its suit, sharing no
// card with each other and avoiding the cells of the two kept v-cards.
inline bool windows_exist(const SplitCase3332& c) {
  struct Win {
    int suit;
    std::uint32_t span;
  };
  std::array<std::uint32_t, kNumSuits> held{};
  std::array<std::uint32_t, kNumSuits> blocked{};
  for (int s = 0; s < kNumSuits; ++s)
    for (Value x : c.groups[static_cast<std::size_t>(s)]) held[static_cast<std::size_t>(s)] |= cells(x);
  for (Suit s : c.vs) blocked[static_cast<std::size_t>(index_of(s))] |= cells(c.dup);

  constexpr int kLen = 5;
  constexpr std::uint32_t kAce = (1u << kMinPosition) | (1u << kMaxPosition);
  std::vector<Win> wins;
  for (int s = 0; s < kNumSuits; ++s) {
    for (int start = kMinPosition; start + kLen - 1 <= kMaxPosition; ++start) {
      const std::uint32_t span = ((1u << kLen) - 1) << start;
      if (span & blocked[static_cast<std::size_t>(s)]) continue;
      if (__builtin_popcount(span & held[static_cast<std::size_t>(s)]) >= 2) wins.push_back(Win{s, span});
    }
  }
  for (std::size_t i = 0; i < wins.size(); ++i) {
    for (std::size_t j = i + 1; j < wins.size(); ++j) {
      if (wins[i].suit != wins[j].suit) return true;
      if (wins[i].span & wins[j].span) continue;
      // Positions 1 and 14 are the same physical ace.
      if ((wins[i].span & kAce) && (wins[j].span & kAce)) continue;
      return true;
    }
  }
  return false;
}

inline CaseReport faithful_chunk(Value wild, Value dup) {
  CaseReport r;
  std::vector<Value> vals;
  for (Value x : kAllValues)
    if (x != wild && x != dup) vals.push_back(x);

  SplitCase3332 sc{wild, dup, {}, {}};
  int worst = 0;
  for_each_combination(vals, 2, [&](const std::vector<Value>& two) {
    const std::vector<Value> nine = without(vals, two);
    // Unordered triples: each triple holds the smallest value left.
    const std::vector<Value> nine_tail(nine.begin() + 1, nine.end());
    for_each_combination(nine_tail, 2, [&](const std::vector<Value>& a2) {
      std::vector<Value> a{nine[0], a2[0], a2[1]};
      const std::vector<Value> six = without(nine, a);
      const std::vector<Value> six_tail(six.begin() + 1, six.end());
      for_each_combination(six_tail, 2, [&](const std::vector<Value>& b2) {
        std::vector<Value> b{six[0], b2[0], b2[1]};
        sc.groups = {a, b, without(six, b), two};
        for (int s1 = 0; s1 < kNumSuits; ++s1) {
          for (int s2 = s1 + 1; s2 < kNumSuits; ++s2) {
            sc.vs = {suit_from_index(s1), suit_from_index(s2)};
            ++r.cases_enumerated;
            if (windows_exist(sc)) {
              ++r.cases_passed;
              continue;
            }
            // The face-up card's suit changes which value-wild cards remain
            // drawable, so every suit is tried.
            const Hand h = sc.hand();
            int value = 0;
            for (Suit ws : kAllSuits) value = std::max(value, min_dist_value(h, JokerContext(Card::natural(wild, ws))));
            worst = std::max(worst, value);
            ++r.escalations;
            const bool ok = value <= 7;
            r.escalated.push_back(Escalation{sc.id(), value, ok});
            if (ok) ++r.cases_passed;
            else r.failures.push_back(sc.id() + " min_dist " + std::to_string(value));
          }
        }
      });
    });
  });
  r.figures["worst_escalated_min_dist"] = worst;
  return r;
}

}  // namespace detail

/// Exhaustive check of the 3-3-3-2 residual split.
inline CaseReport verify_3332(SplitModel model, int workers = 1) {
  CaseReport total;
  if (model == SplitModel::Linear) {
    total.universe = "abstract values 1..12: leftover x ordered 2,3,3,3 groups";
    constexpr int kPairs = 55;
    const auto parts = map_chunks<CaseReport>(12 * kPairs, workers, [](std::size_t i) {
      return detail::linear_chunk(static_cast<int>(i / kPairs) + 1, static_cast<int>(i % kPairs));
    });
    for (const auto& p : parts) total.merge(p);
    total.figures["expected_cases"] = static_cast<std::int64_t>(kLinearCases);
    if (total.cases_enumerated != kLinearCases)
      total.failures.push_back("case total " + std::to_string(total.cases_enumerated) + " != " +
                               std::to_string(kLinearCases));
    return total;
  }
  total.universe = "wildcard value x duplicate value x unordered 3,3,3,2 split x v-card suits";
  const auto parts = map_chunks<CaseReport>(kNumValues * kNumValues, workers, [](std::size_t i) {
    const Value wild = kAllValues[i / kNumValues];
    const Value dup = kAllValues[i % kNumValues];
    if (wild == dup) return CaseReport{};
    return detail::faithful_chunk(wild, dup);
  });
  for (const auto& p : parts) total.merge(p);
  total.figures["expected_cases"] = 13 * 12 * 15400 * 6;
  return total;
}

// ---------------------------------------------------------------------------
// Extremal hand

inline constexpr const char* kExtremalHand = "2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD";
inline constexpr const char* kExtremalWcj = "AH";

/// The published target: 2-6 of hearts, 3-7 of clubs, and a set of kings
/// with K♠ K♦ kept.
inline Declaration extremal_target() {
  auto run = [](Suit s, int start) {
    std::vector<Card> cards;
    for (int p = start; p < start + 5; ++p) cards.push_back(Card::natural(value_at(p), s));
    return Meld::sequence(s, start, std::move(cards));
  };
  return Declaration{{run(Suit::Hearts, 2), run(Suit::Clubs, 3),
                      Meld::set(Value::King, {Card::natural(Value::King, Suit::Spades),
                                              Card::natural(Value::King, Suit::Diamonds),
                                              Card::natural(Value::King, Suit::Hearts)})}};
}

struct ExtremalVariant {
  std::string label;
  std::string hand;
  std::string wcj;
  int value = 0;
};

struct ExtremalReport {
  std::string hand;
  std::string wcj;
  int min_dist = -1;
  MinDistResult solution;
  bool target_valid = false;
  int target_distance = -1;
  std::vector<std::string> target_melds;
  bool construction_matches = false;  // prop3 keeps exactly the published six cards
  int construction_distance = -1;
  std::vector<ExtremalVariant> variants;

  bool passed() const {
    if (min_dist != 7 || !target_valid || target_distance != 7 || !construction_matches) return false;
    return std::all_of(variants.begin(), variants.end(), [](const ExtremalVariant& v) { return v.value == 7; });
  }
};

/// min_dist of the extremal hand is exactly 7, the published target is a
/// valid declaration at distance 7, and the value survives all 24 suit
/// relabelings and the value mirror.
inline ExtremalReport certify_extremal(int workers = 1) {
  ExtremalReport r;
  const Hand h = parse_hand(kExtremalHand);
  const JokerContext ctx(parse_card(kExtremalWcj));
  r.hand = h.render();
  r.wcj = ctx.wcj().token();
  r.solution = min_dist(h, ctx);
  r.min_dist = r.solution.value;

  const Declaration target = extremal_target();
  r.target_valid = validate_declaration(target, ctx).valid;
  r.target_melds = render_declaration(target, ctx);
  r.target_distance = distance(h, Hand::from_cards(target.cards()));

  const Certificate c = construct_prop3(h, ctx);
  std::vector<Card> expected;
  for (const char* t : {"2H", "6H", "3C", "7C", "KS", "KD"}) expected.push_back(parse_card(t));
  std::sort(expected.begin(), expected.end());
  std::vector<Card> kept = c.kept;
  std::sort(kept.begin(), kept.end());
  r.construction_distance = c.claimed_distance;
  r.construction_matches = kept == expected && verify_certificate(h, c, ctx).valid;

  std::array<Suit, 4> perm = kAllSuits;
  std::vector<std::array<Suit, 4>> perms;
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));

  r.variants = map_chunks<ExtremalVariant>(perms.size() + 1, workers, [&](std::size_t i) {
    ExtremalVariant v;
    Hand vh;
    Card w = ctx.wcj();
    if (i < perms.size()) {
      const auto& p = perms[i];
      vh = map_hand(h, [&](Card x) { return permute_suits(x, p); });
      w = permute_suits(w, p);
      v.label = std::string("suits ") + suit_letter(p[0]) + suit_letter(p[1]) + suit_letter(p[2]) + suit_letter(p[3]);
    } else {
      vh = map_hand(h, mirror_card);
      w = mirror_card(w);
      v.label = "mirror";
    }
    v.hand = vh.render();
    v.wcj = w.token();
    v.value = min_dist_value(vh, JokerContext(w));
    return v;
  });
  return r;
}

}  // namespace rummy
