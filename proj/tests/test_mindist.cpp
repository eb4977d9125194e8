#include <gtest/gtest.h>

#include "rummy/declare.hpp"
#include "rummy/mindist.hpp"
#include "support/hands.hpp"

using namespace rummy;

namespace {

MinDistResult solve(const std::string& hand, const std::string& wcj) {
  return min_dist(parse_hand(hand), JokerContext(parse_card(wcj)));
}

// Every invariant a result must satisfy, checked with declare/distance only.
void expect_consistent(const Hand& h, const JokerContext& ctx, const MinDistResult& r) {
  EXPECT_EQ(r.value, kHandSize - static_cast<int>(r.kept.size()));
  EXPECT_EQ(static_cast<int>(r.replacements.size()), r.value);
  EXPECT_EQ(distance(h, r.target), r.value);
  EXPECT_FALSE(r.target.contains(ctx.wcj()));
  const DeclarationCheck chk = validate_declaration_of(r.witness, r.target, ctx);
  EXPECT_TRUE(chk.valid) << to_string(chk.fault) << " " << render_joined(render_declaration(r.witness, ctx));
}

}  // namespace

TEST(Distance, MultisetArithmetic) {
  const Hand h = parse_hand("2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD");
  EXPECT_EQ(distance(h, h), 0);
  EXPECT_EQ(distance(h, parse_hand("2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS AD")), 1);
  EXPECT_EQ(distance(h, parse_hand("AH 2C 3S 4D 5H 6C 7S 8D 9H TC JS QS KS")), 11);
  EXPECT_EQ(distance(parse_hand("JK 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD"),
                     parse_hand("JK 3C 4S 5D 6H 7C 8S 9D TH JC QS KS AD")), 1);
}

TEST(MinDist, ExtremalHandIsSeven) {
  const Hand h = parse_hand("2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD");
  const JokerContext ctx(parse_card("AH"));
  const MinDistResult r = min_dist(h, ctx);
  EXPECT_EQ(r.value, 7);
  expect_consistent(h, ctx, r);
}

TEST(MinDist, DeclarableHandIsZero) {
  const MinDistResult r = solve(fixtures::kDeclarableHand, "AD");
  EXPECT_EQ(r.value, 0);
  EXPECT_TRUE(r.replacements.empty());
}

TEST(MinDist, OneAway) {
  const Hand h = parse_hand("2H 3H 4H 5C 6C 7C 9S 9D 9H JS JD JC KS");
  const JokerContext ctx(parse_card("AD"));
  const MinDistResult r = min_dist(h, ctx);
  EXPECT_EQ(r.value, 1);
  ASSERT_EQ(r.replacements.size(), 1u);
  EXPECT_EQ(r.replacements[0].first, parse_card("KS"));
  expect_consistent(h, ctx, r);
}

TEST(MinDist, WitnessIsReproducible) {
  const MinDistResult a = solve("2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD", "AH");
  const MinDistResult b = solve("2H 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD", "AH");
  const JokerContext ctx(parse_card("AH"));
  EXPECT_EQ(render_declaration(a.witness, ctx), render_declaration(b.witness, ctx));
  EXPECT_EQ(a.target, b.target);
}

TEST(MinDist, EdgeHandsYieldConsistentWitnesses) {
  for (const auto& c : fixtures::edge_cases()) {
    SCOPED_TRACE(c.label);
    const Hand h = parse_hand(c.hand);
    const JokerContext ctx(parse_card(c.wcj));
    const MinDistResult r = min_dist(h, ctx);
    EXPECT_LE(r.value, 7);
    expect_consistent(h, ctx, r);
  }
}

TEST(MinDist, ZeroExactlyWhenDeclarable) {
  for (const auto& c : fixtures::edge_cases()) {
    const Hand h = parse_hand(c.hand);
    const JokerContext ctx(parse_card(c.wcj));
    EXPECT_EQ(min_dist_value(h, ctx) == 0, is_declarable(h, ctx).declarable) << c.label;
  }
}

TEST(MinDist, RandomHandsStayWithinSeven) {
  for (std::uint64_t i = 0; i < 200; ++i) {
    const auto c = fixtures::random_case(99, i);
    const Hand h = parse_hand(c.hand);
    const JokerContext ctx(parse_card(c.wcj));
    const MinDistResult r = min_dist(h, ctx);
    EXPECT_LE(r.value, 7) << c.hand << " / " << c.wcj;
    expect_consistent(h, ctx, r);
  }
}

TEST(MinDist, PhysicalJokerSupplyIsRespected) {
  // Two printed jokers in the deck: a hand holding both leaves only the
  // three wild-value naturals for replacements.
  const DeckConfig deck{2};
  const Hand h = parse_hand("JK JK 2H 5C 8D JS 3H 6C 9D QS 4H 7C TD", deck);
  const JokerContext ctx(parse_card("AH"), deck);
  const MinDistResult r = min_dist(h, ctx);
  EXPECT_EQ(distance(h, r.target), r.value);
  EXPECT_TRUE(validate_declaration_of(r.witness, r.target, ctx).valid);
  EXPECT_LE(r.target.joker_count(ctx), ctx.joker_supply());
}

TEST(MinDist, RejectsTheFaceUpCard) {
  EXPECT_THROW(solve("AH 3C 4S 5D 6H 7C 8S 9D TH JC QS KS KD", "AH"), std::invalid_argument);
}

TEST(MinDist, SymmetryOnSampledHands) {
  const std::array<Suit, 4> rotate{Suit::Clubs, Suit::Diamonds, Suit::Spades, Suit::Hearts};
  for (std::uint64_t i = 0; i < 40; ++i) {
    const Sample s = draw_sample(5, i);
    const int base = min_dist_value(s.hand, s.ctx());
    const Hand ph = map_hand(s.hand, [&](Card c) { return permute_suits(c, rotate); });
    EXPECT_EQ(min_dist_value(ph, JokerContext(permute_suits(s.wcj, rotate))), base);
    EXPECT_EQ(min_dist_value(map_hand(s.hand, mirror_card), JokerContext(mirror_card(s.wcj))), base);
  }
}
