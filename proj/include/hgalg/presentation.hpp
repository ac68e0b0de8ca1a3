// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "hgalg/linear.hpp"
#include "hgalg/word.hpp"

namespace hgalg {

inline constexpr std::size_t kDefaultCap = 12;

struct Generator {
  std::string name;
  bool invertible = false;
};

/// Generator names and the letters derived from them. Parses tokens such as
/// "x", "g^-2", "x^3" and prints words with runs collapsed to powers.
class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<Generator> generators);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t generator_count() const { return generators_.size(); }
  /// All letters in letter order, inverse letters included.
  std::vector<Letter> letters() const;
  bool has_letter(Letter l) const;
  std::optional<Letter> inverse(Letter l) const;
  std::optional<std::size_t> find(std::string_view name) const;

  std::string letter_name(Letter l) const;
  Word parse_token(std::string_view token) const;
  Word parse(const std::vector<std::string>& tokens) const;
  std::string format(const Word& w) const;
  std::string format(const Terms& t) const;

 private:
  std::vector<Generator> generators_;
};

/// Oriented rewrite rule lhs -> rhs. rhs words need not be irreducible.
struct Rule {
  Word lhs;
  Terms rhs;
  std::string label;
};

enum class Backend { kRewriting, kStructureConstants };

/// A relation that must vanish in the algebra but is not a subword rule
/// (for example a linear side relation). Algebra-map checks test these too.
struct VanishingRelation {
  Terms element;
  std::string label;
};

struct PresentationOptions {
  std::string name;
  Field field = Field::rationals();
  std::vector<Generator> generators;
  std::vector<Rule> rules;
  /// Adds b*a -> a*b for every pair of letters a < b.
  bool commutative = false;
  std::vector<std::uint32_t> forbidden_characteristics;
  std::size_t cap = kDefaultCap;
  Backend backend = Backend::kRewriting;
  /// Linear relations among irreducible words, applied after subword rewriting.
  std::optional<LinearReducer> side_relations;
  std::vector<VanishingRelation> vanishing;
};

struct CriticalPair {
  std::string description;
  Word overlap;
  Terms left;
  Terms right;
};

struct ConfluenceReport {
  std::size_t checked = 0;
  std::size_t skipped_over_cap = 0;
  std::vector<CriticalPair> unresolved;
  bool confluent() const { return unresolved.empty(); }
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// A finitely presented associative unital algebra with a rewriting normal
/// form: subword rules first, then optional linear side relations. Immutable
/// after construction; normal forms are memoized behind a mutex.
class Presentation {
 public:
  static PresentationPtr create(PresentationOptions options);

  const std::string& name() const { return options_.name; }
  Field field() const { return options_.field; }
  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<VanishingRelation>& vanishing() const { return options_.vanishing; }
  const std::optional<LinearReducer>& side_relations() const { return options_.side_relations; }
  Backend backend() const { return options_.backend; }
  std::size_t cap() const { return options_.cap; }
  const PresentationOptions& options() const { return options_; }

  /// Copy with a different degree cap (a distinct presentation object).
  PresentationPtr with_cap(std::size_t cap) const;

  Terms normal_form(const Word& w) const;
  Terms normal_form(const Terms& t) const;
  /// Normal form with an explicit cap, for internal constructions that need
  /// longer intermediate words than user-facing computations.
  Terms normal_form(const Word& w, std::size_t cap) const;
  bool is_irreducible(const Word& w) const;

  /// Basis of irreducible words when the algebra is finite-dimensional
  /// (detected by enumeration up to the cap); nullopt otherwise. The unit
  /// (empty word) is always first.
  const std::optional<std::vector<Word>>& basis() const { return basis_; }
  bool finite_dimensional() const { return basis_.has_value(); }

  /// Every pair of letters commutes under normal form.
  bool is_commutative() const;

  /// Overlap and inclusion ambiguities of the subword rules, each resolved
  /// to normal form on both sides.
  ConfluenceReport check_local_confluence() const;

  std::string format(const Word& w) const { return alphabet_.format(w); }
  std::string format(const Terms& t) const { return alphabet_.format(t); }

 private:
  explicit Presentation(PresentationOptions options);
  struct NfEntry {
    Terms value;
    std::size_t height;  // longest word met while rewriting
  };
  const NfEntry& normal_form_impl(const Word& w, std::size_t cap, std::size_t depth) const;
  std::optional<std::pair<std::size_t, std::size_t>> first_match(const Word& w) const;
  void compute_basis();

  PresentationOptions options_;
  Alphabet alphabet_;
  std::vector<Rule> rules_;
  std::unordered_map<Letter, std::vector<std::size_t>> rules_by_first_;
  std::optional<std::vector<Word>> basis_;

  mutable std::mutex memo_mutex_;
  mutable std::unordered_map<Word, NfEntry, WordHash> memo_;
};

}  // namespace hgalg
