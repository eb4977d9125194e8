#pragma once

#include <algorithm>
#include <array>
#include <cctype>
#include <compare>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rummy {

inline constexpr int kNumValues = 13;
inline constexpr int kNumSuits = 4;
inline constexpr int kNumNaturals = kNumValues * kNumSuits;
inline constexpr int kHandSize = 13;
// Positions run 1..14 along A 2 3 ... K A; the ace sits at both ends.
inline constexpr int kMinPosition = 1;
inline constexpr int kMaxPosition = 14;
inline constexpr int kDefaultPrintedJokers = 1;

enum class Value : std::uint8_t {
  Ace = 1, Two, Three, Four, Five, Six, Seven, Eight, Nine, Ten, Jack, Queen, King
};

enum class Suit : std::uint8_t { Hearts = 0, Clubs, Diamonds, Spades };

inline constexpr std::array<Value, kNumValues> kAllValues = {
    Value::Ace,   Value::Two,   Value::Three, Value::Four, Value::Five,
    Value::Six,   Value::Seven, Value::Eight, Value::Nine, Value::Ten,
    Value::Jack,  Value::Queen, Value::King};

inline constexpr std::array<Suit, kNumSuits> kAllSuits = {
    Suit::Hearts, Suit::Clubs, Suit::Diamonds, Suit::Spades};

constexpr int ordinal(Value v) { return static_cast<int>(v); }
constexpr int index_of(Suit s) { return static_cast<int>(s); }
constexpr Value value_from_ordinal(int o) { return static_cast<Value>(o); }
constexpr Suit suit_from_index(int i) { return static_cast<Suit>(i); }

// Value occupying a position on the 1..14 line.
constexpr Value value_at(int position) {
  return position == kMaxPosition ? Value::Ace : value_from_ordinal(position);
}

// Positions a value may occupy inside a sequence.
struct PositionSet {
  std::array<int, 2> items{};
  int count = 0;

  constexpr const int* begin() const { return items.data(); }
  constexpr const int* end() const { return items.data() + count; }
  constexpr bool contains(int p) const {
    for (int i = 0; i < count; ++i)
      if (items[i] == p) return true;
    return false;
  }
  constexpr int min() const { return items[0]; }
};

constexpr PositionSet positions(Value v) {
  if (v == Value::Ace) return PositionSet{{kMinPosition, kMaxPosition}, 2};
  return PositionSet{{ordinal(v), 0}, 1};
}

// Mirror map on values: A<->A, 2<->K, 3<->Q, ... (position p <-> 15 - p).
constexpr Value mirror(Value v) {
  if (v == Value::Ace) return Value::Ace;
  return value_from_ordinal(15 - ordinal(v));
}

inline char suit_letter(Suit s) { return "HCDS"[index_of(s)]; }

inline std::string_view suit_symbol(Suit s) {
  static constexpr std::array<std::string_view, 4> kSymbols = {"♥", "♣", "♦", "♠"};
  return kSymbols[index_of(s)];
}

inline std::string value_token(Value v) {
  static constexpr std::array<std::string_view, 14> kTokens = {
      "", "A", "2", "3", "4", "5", "6", "7", "8", "9", "T", "J", "Q", "K"};
  return std::string(kTokens[ordinal(v)]);
}

/// A playing card: a natural (value, suit) pair or the printed joker.
///
/// Naturals are encoded 0..51 as suit * 13 + (value - 1); the printed joker
/// is 52. All printed jokers are interchangeable, so they share one code.
class Card {
 public:
  static constexpr std::uint8_t kJokerCode = kNumNaturals;

  constexpr Card() = default;

  static constexpr Card natural(Value v, Suit s) {
    return Card(static_cast<std::uint8_t>(index_of(s) * kNumValues + ordinal(v) - 1));
  }
  static constexpr Card printed_joker() { return Card(kJokerCode); }
  static constexpr Card from_code(int code) { return Card(static_cast<std::uint8_t>(code)); }

  constexpr bool is_printed_joker() const { return code_ == kJokerCode; }
  constexpr bool is_natural() const { return code_ < kJokerCode; }
  constexpr int code() const { return code_; }
  constexpr Value value() const { return value_from_ordinal(code_ % kNumValues + 1); }
  constexpr Suit suit() const { return suit_from_index(code_ / kNumValues); }

  // Canonical order: by suit, then lowest position; printed jokers last.
  constexpr int sort_key() const {
    if (is_printed_joker()) return 1000;
    return index_of(suit()) * 16 + positions(value()).min();
  }

  constexpr bool operator==(const Card&) const = default;
  constexpr std::strong_ordering operator<=>(const Card& other) const {
    return sort_key() <=> other.sort_key();
  }

  std::string token() const {
    if (is_printed_joker()) return "JK";
    return value_token(value()) + suit_letter(suit());
  }

 private:
  constexpr explicit Card(std::uint8_t code) : code_(code) {}
  std::uint8_t code_ = kJokerCode;
};

constexpr std::uint64_t bit_of(Card c) { return std::uint64_t{1} << c.code(); }

// Deck composition. The natural part is fixed; only the printed joker count
// varies between rule sets.
struct DeckConfig {
  int printed_jokers = kDefaultPrintedJokers;
  constexpr bool operator==(const DeckConfig&) const = default;
};

/// The face-up wildcard card. Every card of its value, and every printed
/// joker, is a joker; the wildcard card itself is out of play.
class JokerContext {
 public:
  constexpr explicit JokerContext(Card wcj, DeckConfig deck = {}) : wcj_(wcj), deck_(deck) {
    if (!wcj.is_natural()) throw std::invalid_argument("wildcard card must be a natural card");
  }

  constexpr Card wcj() const { return wcj_; }
  constexpr Value wild_value() const { return wcj_.value(); }
  constexpr const DeckConfig& deck() const { return deck_; }

  constexpr bool is_joker(Card c) const {
    return c.is_printed_joker() || c.value() == wcj_.value();
  }
  constexpr bool is_wcj(Card c) const { return c == wcj_; }

  // Number of cards in play that act as jokers (printed plus the three
  // remaining wildcard-value naturals).
  constexpr int joker_supply() const { return deck_.printed_jokers + kNumSuits - 1; }

 private:
  Card wcj_;
  DeckConfig deck_;
};

// ---------------------------------------------------------------------------
// Parsing

class ParseError : public std::runtime_error {
 public:
  enum class Kind { BadToken, Arity, Multiplicity };

  ParseError(Kind kind, std::string detail)
      : std::runtime_error(describe(kind, detail)), kind_(kind), detail_(std::move(detail)) {}

  Kind kind() const { return kind_; }
  const std::string& detail() const { return detail_; }

 private:
  static std::string describe(Kind kind, const std::string& detail) {
    switch (kind) {
      case Kind::BadToken: return "malformed card token '" + detail + "'";
      case Kind::Arity: return "hand must hold exactly 13 cards, got " + detail;
      case Kind::Multiplicity: return "card exceeds deck multiplicity: " + detail;
    }
    return detail;
  }

  Kind kind_;
  std::string detail_;
};

inline Card parse_card(std::string_view token) {
  auto fail = [&]() -> Card { throw ParseError(ParseError::Kind::BadToken, std::string(token)); };
  std::string t;
  for (char ch : token) t += static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  if (t == "JK") return Card::printed_joker();
  if (t.size() < 2 || t.size() > 3) return fail();

  const std::string rank = t.substr(0, t.size() - 1);
  const char suit_ch = t.back();
  Suit suit{};
  switch (suit_ch) {
    case 'H': suit = Suit::Hearts; break;
    case 'C': suit = Suit::Clubs; break;
    case 'D': suit = Suit::Diamonds; break;
    case 'S': suit = Suit::Spades; break;
    default: return fail();
  }
  int ord = 0;
  if (rank == "A") ord = 1;
  else if (rank == "T" || rank == "10") ord = 10;
  else if (rank == "J") ord = 11;
  else if (rank == "Q") ord = 12;
  else if (rank == "K") ord = 13;
  else if (rank.size() == 1 && rank[0] >= '2' && rank[0] <= '9') ord = rank[0] - '0';
  else return fail();
  return Card::natural(value_from_ordinal(ord), suit);
}

inline std::vector<std::string> split_tokens(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

// ---------------------------------------------------------------------------
// Hand

/// Exactly 13 cards from a single deck, kept in canonical order.
class Hand {
 public:
  Hand() = default;

  static Hand from_cards(std::vector<Card> cards, const DeckConfig& deck = {}) {
    if (cards.size() != kHandSize)
      throw ParseError(ParseError::Kind::Arity, std::to_string(cards.size()));
    Hand h;
    for (Card c : cards) {
      if (c.is_printed_joker()) {
        if (++h.printed_jokers_ > deck.printed_jokers)
          throw ParseError(ParseError::Kind::Multiplicity, c.token());
      } else {
        if (h.naturals_ & bit_of(c)) throw ParseError(ParseError::Kind::Multiplicity, c.token());
        h.naturals_ |= bit_of(c);
      }
    }
    std::sort(cards.begin(), cards.end());
    h.cards_ = std::move(cards);
    return h;
  }

  const std::vector<Card>& cards() const { return cards_; }
  std::uint64_t natural_mask() const { return naturals_; }
  int printed_jokers() const { return printed_jokers_; }

  bool contains(Card c) const {
    return c.is_printed_joker() ? printed_jokers_ > 0 : (naturals_ & bit_of(c)) != 0;
  }
  int count(Card c) const {
    return c.is_printed_joker() ? printed_jokers_ : ((naturals_ & bit_of(c)) ? 1 : 0);
  }

  int joker_count(const JokerContext& ctx) const {
    return static_cast<int>(std::count_if(cards_.begin(), cards_.end(),
                                          [&](Card c) { return ctx.is_joker(c); }));
  }

  // Throws std::invalid_argument if the hand holds the face-up wildcard card.
  void require_playable(const JokerContext& ctx) const {
    if (contains(ctx.wcj()))
      throw std::invalid_argument("hand contains the face-up wildcard card " + ctx.wcj().token());
  }

  std::string render() const {
    std::string out;
    for (Card c : cards_) {
      if (!out.empty()) out += ' ';
      out += c.token();
    }
    return out;
  }

  bool operator==(const Hand& other) const { return cards_ == other.cards_; }

 private:
  std::vector<Card> cards_;
  std::uint64_t naturals_ = 0;
  int printed_jokers_ = 0;
};

inline Hand parse_hand(std::string_view text, const DeckConfig& deck = {}) {
  std::vector<Card> cards;
  for (const auto& tok : split_tokens(text)) cards.push_back(parse_card(tok));
  return Hand::from_cards(std::move(cards), deck);
}

// Card relabelings used by symmetry checks.
inline Card permute_suits(Card c, const std::array<Suit, 4>& perm) {
  if (c.is_printed_joker()) return c;
  return Card::natural(c.value(), perm[index_of(c.suit())]);
}

inline Card mirror_card(Card c) {
  if (c.is_printed_joker()) return c;
  return Card::natural(mirror(c.value()), c.suit());
}

template <typename F>
Hand map_hand(const Hand& h, F&& f, const DeckConfig& deck = {}) {
  std::vector<Card> out;
  out.reserve(h.cards().size());
  for (Card c : h.cards()) out.push_back(f(c));
  return Hand::from_cards(std::move(out), deck);
}

}  // namespace rummy
