// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/presentation.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "hgalg/errors.hpp"

namespace hgalg {

namespace {

constexpr std::size_t kMaxRewriteDepth = 20000;
constexpr std::size_t kMaxBasisSize = 5000;

}  // namespace

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
  std::set<std::string> seen;
  for (const auto& g : generators_) {
    if (g.name.empty()) throw InputError("generator name must not be empty");
    if (g.name == "1") throw InputError("generator name '1' is reserved for the unit");
    if (!seen.insert(g.name).second) throw InputError("duplicate generator name '" + g.name + "'");
  }
}

std::vector<Letter> Alphabet::letters() const {
  std::vector<Letter> out;
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    out.push_back(make_letter(i, false));
    if (generators_[i].invertible) out.push_back(make_letter(i, true));
  }
  return out;
}

bool Alphabet::has_letter(Letter l) const {
  const std::size_t g = generator_of(l);
  if (g >= generators_.size()) return false;
  return !is_inverse_letter(l) || generators_[g].invertible;
}

std::optional<Letter> Alphabet::inverse(Letter l) const {
  if (!has_letter(l) || !generators_[generator_of(l)].invertible) return std::nullopt;
  return l ^ 1u;
}

std::optional<std::size_t> Alphabet::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  return std::nullopt;
}

std::string Alphabet::letter_name(Letter l) const {
  if (!has_letter(l)) return "?" + std::to_string(l);
  const std::string& n = generators_[generator_of(l)].name;
  return is_inverse_letter(l) ? n + "^-1" : n;
}

Word Alphabet::parse_token(std::string_view token) const {
  if (auto g = find(token)) return {make_letter(*g, false)};
  if (token == "1") return {};
  const auto caret = token.rfind('^');
  if (caret == std::string_view::npos || caret == 0) throw InputError("unknown symbol '" + std::string(token) + "'");
  const std::string_view base = token.substr(0, caret);
  const std::string_view exp_text = token.substr(caret + 1);
  auto g = find(base);
  if (!g) throw InputError("unknown symbol '" + std::string(base) + "' in token '" + std::string(token) + "'");
  long exp = 0;
  const auto* end = exp_text.data() + exp_text.size();
  auto [ptr, ec] = std::from_chars(exp_text.data(), end, exp);
  if (ec != std::errc() || ptr != end) throw InputError("bad exponent in token '" + std::string(token) + "'");
  if (exp < 0 && !generators_[*g].invertible)
    throw InputError("negative power of non-invertible generator in token '" + std::string(token) + "'");
  const Letter l = make_letter(*g, exp < 0);
  return Word(static_cast<std::size_t>(exp < 0 ? -exp : exp), l);
}

Word Alphabet::parse(const std::vector<std::string>& tokens) const {
  Word w;
  for (const auto& t : tokens) {
    Word part = parse_token(t);
    w.insert(w.end(), part.begin(), part.end());
  }
  return w;
}

std::string Alphabet::format(const Word& w) const {
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    const std::size_t run = j - i;
    if (!out.empty()) out += "*";
    if (!has_letter(w[i])) {
      out += "?" + std::to_string(w[i]);
    } else {
      const std::string& n = generators_[generator_of(w[i])].name;
      if (is_inverse_letter(w[i])) {
        out += n + "^-" + std::to_string(run);
      } else {
        out += run == 1 ? n : n + "^" + std::to_string(run);
      }
    }
    i = j;
  }
  return out;
}

std::string Alphabet::format(const Terms& t) const {
  if (t.empty()) return "0";
  std::string out;
  for (const auto& [w, c] : t) {
    std::string coeff = c.to_string();
    const bool negative = !coeff.empty() && coeff.front() == '-';
    if (negative) coeff.erase(0, 1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (w.empty()) {
      out += coeff;
    } else {
      if (coeff != "1") out += coeff + "*";
      out += format(w);
    }
  }
  return out;
}

Presentation::Presentation(PresentationOptions options) : options_(std::move(options)), alphabet_(options_.generators) {
  const auto forbidden = options_.forbidden_characteristics;
  if (std::find(forbidden.begin(), forbidden.end(), options_.field.characteristic()) != forbidden.end())
    throw InputError("presentation '" + options_.name + "' is not defined in characteristic " +
                     std::to_string(options_.field.characteristic()));
  if (options_.cap == 0) throw InputError("degree cap must be positive");

  auto check_word = [&](const Word& w, const std::string& where) {
    for (Letter l : w)
      if (!alphabet_.has_letter(l)) throw InputError("unknown letter in " + where);
  };
  auto check_terms = [&](const Terms& t, const std::string& where) {
    for (const auto& [w, c] : t) {
      check_word(w, where);
      if (!(c.field() == options_.field)) throw InputError("coefficient field mismatch in " + where);
    }
  };

  std::set<Word> lhs_seen;
  for (const auto& r : options_.rules) {
    if (r.lhs.empty()) throw InputError("rewrite rule with empty left-hand side");
    Rule rule = r;
    if (rule.label.empty()) rule.label = alphabet_.format(rule.lhs) + " -> " + alphabet_.format(rule.rhs);
    check_word(rule.lhs, "rule " + rule.label);
    check_terms(rule.rhs, "rule " + rule.label);
    for (const auto& [w, c] : rule.rhs)
      if (w == rule.lhs) throw InputError("rule " + rule.label + " rewrites a word to itself");
    lhs_seen.insert(rule.lhs);
    rules_.push_back(std::move(rule));
  }
  const Scalar one = Scalar::one(options_.field);
  for (std::size_t g = 0; g < alphabet_.generator_count(); ++g) {
    if (!alphabet_.generators()[g].invertible) continue;
    const Letter a = make_letter(g, false);
    const Letter b = make_letter(g, true);
    for (const Word& lhs : {Word{a, b}, Word{b, a}}) {
      if (!lhs_seen.insert(lhs).second) continue;
      rules_.push_back(Rule{lhs, Terms{{Word{}, one}}, alphabet_.format(lhs) + " -> 1"});
    }
  }
  if (options_.commutative) {
    const auto letters = alphabet_.letters();
    for (std::size_t i = 0; i < letters.size(); ++i) {
      for (std::size_t j = i + 1; j < letters.size(); ++j) {
        const Letter a = letters[i], b = letters[j];
        if (generator_of(a) == generator_of(b)) continue;
        Word lhs{b, a};
        if (!lhs_seen.insert(lhs).second) continue;
        rules_.push_back(Rule{lhs, Terms{{Word{a, b}, one}}, alphabet_.format(lhs) + " -> " + alphabet_.format(Word{a, b})});
      }
    }
  }
  for (std::size_t i = 0; i < rules_.size(); ++i) rules_by_first_[rules_[i].lhs.front()].push_back(i);

  for (const auto& v : options_.vanishing) check_terms(v.element, "relation " + v.label);
  if (options_.side_relations && !(options_.side_relations->field() == options_.field))
    throw InputError("side relations over a different field");
  compute_basis();
}

PresentationPtr Presentation::create(PresentationOptions options) {
  return PresentationPtr(new Presentation(std::move(options)));
}

PresentationPtr Presentation::with_cap(std::size_t cap) const {
  PresentationOptions o = options_;
  o.cap = cap;
  return create(std::move(o));
}

std::optional<std::pair<std::size_t, std::size_t>> Presentation::first_match(const Word& w) const {
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    auto it = rules_by_first_.find(w[pos]);
    if (it == rules_by_first_.end()) continue;
    for (std::size_t ri : it->second) {
      const Word& lhs = rules_[ri].lhs;
      if (pos + lhs.size() <= w.size() && std::equal(lhs.begin(), lhs.end(), w.begin() + pos)) return std::make_pair(pos, ri);
    }
  }
  return std::nullopt;
}

bool Presentation::is_irreducible(const Word& w) const {
  if (first_match(w)) return false;
  if (options_.side_relations && options_.side_relations->rows().count(w)) return false;
  return true;
}

const Presentation::NfEntry& Presentation::normal_form_impl(const Word& w, std::size_t cap, std::size_t depth) const {
  if (w.size() > cap) throw CapExceeded("normal form", w.size(), cap);
  if (depth > kMaxRewriteDepth) throw InputError("rewriting in '" + options_.name + "' does not terminate");
  {
    std::lock_guard<std::mutex> lock(memo_mutex_);
    auto it = memo_.find(w);
    if (it != memo_.end()) {
      if (it->second.height > cap) throw CapExceeded("normal form", it->second.height, cap);
      return it->second;
    }
  }
  NfEntry entry{{}, w.size()};
  if (auto m = first_match(w)) {
    const auto [pos, ri] = *m;
    const Rule& rule = rules_[ri];
    for (const auto& [u, c] : rule.rhs) {
      Word next(w.begin(), w.begin() + pos);
      next.insert(next.end(), u.begin(), u.end());
      next.insert(next.end(), w.begin() + pos + rule.lhs.size(), w.end());
      const NfEntry& sub = normal_form_impl(next, cap, depth + 1);
      add_terms(entry.value, sub.value, c);
      entry.height = std::max(entry.height, sub.height);
    }
  } else {
    entry.value.emplace(w, Scalar::one(options_.field));
  }
  std::lock_guard<std::mutex> lock(memo_mutex_);
  // unordered_map references stay valid across rehashing.
  return memo_.emplace(w, std::move(entry)).first->second;
}

Terms Presentation::normal_form(const Word& w, std::size_t cap) const {
  Terms t = normal_form_impl(w, cap, 0).value;
  if (options_.side_relations) t = options_.side_relations->reduce(t);
  return t;
}

Terms Presentation::normal_form(const Word& w) const { return normal_form(w, options_.cap); }

Terms Presentation::normal_form(const Terms& t) const {
  Terms out;
  for (const auto& [w, c] : t) add_terms(out, normal_form_impl(w, options_.cap, 0).value, c);
  if (options_.side_relations) out = options_.side_relations->reduce(out);
  return out;
}

void Presentation::compute_basis() {
  if (options_.side_relations) return;
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  const auto letters = alphabet_.letters();
  while (!level.empty()) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Letter l : letters) {
        Word e = w;
        e.push_back(l);
        if (!is_irreducible(e)) continue;
        next.push_back(std::move(e));
      }
    }
    if (next.empty()) break;
    if (next.front().size() > options_.cap || all.size() + next.size() > kMaxBasisSize) return;
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), DegLex());
  basis_ = std::move(all);
}

bool Presentation::is_commutative() const {
  const auto letters = alphabet_.letters();
  for (std::size_t i = 0; i < letters.size(); ++i)
    for (std::size_t j = i + 1; j < letters.size(); ++j)
      if (normal_form(Word{letters[i], letters[j]}) != normal_form(Word{letters[j], letters[i]})) return false;
  return true;
}

ConfluenceReport Presentation::check_local_confluence() const {
  ConfluenceReport report;
  auto resolve = [&](const Word& prefix, const Terms& middle, const Word& suffix) {
    Terms t;
    for (const auto& [u, c] : middle) add_term(t, concat(concat(prefix, u), suffix), c);
    return normal_form(t);
  };
  auto examine = [&](const Word& overlap, const Terms& left, const Terms& right, const std::string& what) {
    if (overlap.size() > options_.cap) {
      ++report.skipped_over_cap;
      return;
    }
    ++report.checked;
    if (left != right) report.unresolved.push_back(CriticalPair{what, overlap, left, right});
  };
  for (const Rule& r1 : rules_) {
    for (const Rule& r2 : rules_) {
      const Word& a = r1.lhs;
      const Word& b = r2.lhs;
      // Overlap: a = u v, b = v w with u, v, w non-empty.
      for (std::size_t k = 1; k < a.size() && k < b.size(); ++k) {
        if (!std::equal(a.end() - k, a.end(), b.begin())) continue;
        const Word u(a.begin(), a.end() - k);
        const Word w(b.begin() + k, b.end());
        const Word overlap = concat(a, w);
        if (overlap.size() > options_.cap) {
          ++report.skipped_over_cap;
          continue;
        }
        examine(overlap, resolve({}, r1.rhs, w), resolve(u, r2.rhs, {}),
                "overlap of [" + r1.label + "] and [" + r2.label + "]");
      }
      // Inclusion: b occurs inside a.
      if (&r1 == &r2 || b.size() > a.size()) continue;
      for (std::size_t pos = 0; pos + b.size() <= a.size(); ++pos) {
        if (!std::equal(b.begin(), b.end(), a.begin() + pos)) continue;
        if (b.size() == a.size()) {
          if (r1.rhs == r2.rhs) continue;
        }
        const Word u(a.begin(), a.begin() + pos);
        const Word w(a.begin() + pos + b.size(), a.end());
        if (a.size() > options_.cap) {
          ++report.skipped_over_cap;
          continue;
        }
        examine(a, normal_form(r1.rhs), resolve(u, r2.rhs, w), "inclusion of [" + r2.label + "] in [" + r1.label + "]");
      }
    }
  }
  return report;
}

}  // namespace hgalg
