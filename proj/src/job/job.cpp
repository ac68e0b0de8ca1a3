// Copyright 2026 The hgalg Authors
// SPDX-License-Identifier: Apache-2.0

#include "hgalg/job.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "hgalg/envelope.hpp"
#include "hgalg/errors.hpp"
#include "hgalg/ore.hpp"

namespace hgalg {

using nlohmann::json;

namespace {

// A json value together with its path in the document, for diagnostics.
class Node {
 public:
  Node(const json& j, std::string path) : j_(&j), path_(std::move(path)) {}

  const json& raw() const { return *j_; }
  const std::string& path() const { return path_; }

  [[noreturn]] void fail(const std::string& what) const { throw InputError("job field " + path_ + ": " + what); }

  bool has(const std::string& key) const { return j_->is_object() && j_->contains(key); }
  Node at(const std::string& key) const {
    if (!j_->is_object()) fail("expected an object");
    if (!j_->contains(key)) fail("missing required key '" + key + "'");
    return Node((*j_)[key], path_ + "." + key);
  }
  std::optional<Node> opt(const std::string& key) const {
    if (!has(key)) return std::nullopt;
    return at(key);
  }
  void allow_keys(std::initializer_list<const char*> keys) const {
    if (!j_->is_object()) fail("expected an object");
    for (const auto& [k, v] : j_->items()) {
      if (std::none_of(keys.begin(), keys.end(), [&](const char* a) { return k == a; })) fail("unknown key '" + k + "'");
    }
  }

  std::string str() const {
    if (!j_->is_string()) fail("expected a string");
    return j_->get<std::string>();
  }
  bool boolean() const {
    if (!j_->is_boolean()) fail("expected true or false");
    return j_->get<bool>();
  }
  std::size_t count() const {
    if (!j_->is_number_unsigned()) fail("expected a non-negative integer");
    return j_->get<std::size_t>();
  }
  std::vector<Node> items() const {
    if (!j_->is_array()) fail("expected an array");
    std::vector<Node> out;
    for (std::size_t i = 0; i < j_->size(); ++i) out.emplace_back((*j_)[i], path_ + "[" + std::to_string(i) + "]");
    return out;
  }
  // Object members in document order is not preserved by json; keys are sorted.
  std::vector<std::pair<std::string, Node>> members() const {
    if (!j_->is_object()) fail("expected an object");
    std::vector<std::pair<std::string, Node>> out;
    for (const auto& [k, v] : j_->items()) out.emplace_back(k, Node(v, path_ + "." + k));
    return out;
  }

 private:
  const json* j_;
  std::string path_;
};

Field parse_field(const Node& n) {
  const std::string s = n.str();
  if (s == "Q" || s == "QQ" || s == "rationals") return Field::rationals();
  std::string digits;
  if (s.rfind("F_", 0) == 0)
    digits = s.substr(2);
  else if (s.rfind("GF(", 0) == 0 && s.back() == ')')
    digits = s.substr(3, s.size() - 4);
  if (digits.empty() || !std::all_of(digits.begin(), digits.end(), ::isdigit) || digits.size() > 10)
    n.fail("expected \"Q\", \"F_p\" or \"GF(p)\", got \"" + s + "\"");
  try {
    return Field::prime(static_cast<std::uint32_t>(std::stoul(digits)));
  } catch (const InputError& e) {
    n.fail(e.what());
  }
}

Scalar parse_coeff(const Node& n, Field f) {
  if (n.raw().is_number()) n.fail("coefficients must be strings such as \"3/2\"");
  try {
    return Scalar::parse(f, n.str());
  } catch (const InputError& e) {
    n.fail(e.what());
  }
}

Word parse_word(const Node& n, const Alphabet& a) {
  std::vector<std::string> tokens;
  for (const Node& t : n.items()) tokens.push_back(t.str());
  try {
    return a.parse(tokens);
  } catch (const InputError& e) {
    n.fail(e.what());
  }
}

// [{"coeff": "c", "word": [tokens]}, ...]
Terms parse_terms(const Node& n, const Alphabet& a, Field f) {
  Terms t;
  for (const Node& item : n.items()) {
    item.allow_keys({"coeff", "word"});
    const Scalar c = item.has("coeff") ? parse_coeff(item.at("coeff"), f) : Scalar::one(f);
    add_term(t, parse_word(item.at("word"), a), c);
  }
  return t;
}

Element parse_element(const Node& n, const PresentationPtr& p) {
  try {
    return Element(p, parse_terms(n, p->alphabet(), p->field()));
  } catch (const CapExceeded&) {
    throw;
  } catch (const InputError& e) {
    const std::string what = e.what();
    if (what.rfind("job field", 0) == 0) throw;
    n.fail(what);
  }
}

// [{"coeff": "c", "factors": [word, word, ...]}, ...]
Tensor parse_tensor(const Node& n, const TensorSpace& s, Field f) {
  Tensor t(s, f);
  for (const Node& item : n.items()) {
    item.allow_keys({"coeff", "factors"});
    const Scalar c = item.has("coeff") ? parse_coeff(item.at("coeff"), f) : Scalar::one(f);
    const auto factors = item.at("factors").items();
    if (factors.size() != s.size())
      item.fail("expected " + std::to_string(s.size()) + " factors, got " + std::to_string(factors.size()));
    std::vector<Terms> fs;
    for (std::size_t i = 0; i < s.size(); ++i) fs.push_back(Terms{{parse_word(factors[i], s[i].alg->alphabet()), Scalar::one(f)}});
    t += Tensor::pure(s, fs, c);
  }
  return t;
}

Letter parse_generator(const Node& n, const PresentationPtr& p) {
  const std::string name = n.str();
  const auto g = p->alphabet().find(name);
  if (!g) n.fail("unknown generator '" + name + "'");
  return make_letter(*g, false);
}

Letter generator_key(const Node& parent, const std::string& key, const PresentationPtr& p) {
  const auto g = p->alphabet().find(key);
  if (!g) parent.fail("unknown generator '" + key + "'");
  return make_letter(*g, false);
}

PresentationPtr parse_algebra(const Node& n, Field f, std::size_t default_cap, std::optional<std::size_t> cap_override) {
  n.allow_keys({"name", "generators", "rules", "commutative", "forbidden_characteristics", "backend", "vanishing", "cap"});
  PresentationOptions o;
  o.name = n.has("name") ? n.at("name").str() : "A";
  o.field = f;
  for (const Node& g : n.at("generators").items()) {
    if (g.raw().is_string()) {
      o.generators.push_back({g.str(), false});
    } else {
      g.allow_keys({"name", "invertible"});
      o.generators.push_back({g.at("name").str(), g.has("invertible") && g.at("invertible").boolean()});
    }
  }
  std::set<std::string> seen;
  for (const auto& g : o.generators) {
    if (g.name.empty()) n.at("generators").fail("empty generator name");
    if (!seen.insert(g.name).second) n.at("generators").fail("duplicate generator '" + g.name + "'");
  }
  const Alphabet alphabet(o.generators);
  if (auto rules = n.opt("rules")) {
    for (const Node& r : rules->items()) {
      r.allow_keys({"lhs", "rhs", "label"});
      Rule rule{parse_word(r.at("lhs"), alphabet), r.has("rhs") ? parse_terms(r.at("rhs"), alphabet, f) : Terms{},
                r.has("label") ? r.at("label").str() : std::string{}};
      if (rule.lhs.empty()) r.at("lhs").fail("rule left side must be a non-empty word");
      o.rules.push_back(std::move(rule));
    }
  }
  if (auto c = n.opt("commutative")) o.commutative = c->boolean();
  if (auto fc = n.opt("forbidden_characteristics")) {
    for (const Node& p : fc->items()) o.forbidden_characteristics.push_back(static_cast<std::uint32_t>(p.count()));
  }
  if (auto b = n.opt("backend")) {
    const std::string s = b->str();
    if (s == "rewriting")
      o.backend = Backend::kRewriting;
    else if (s == "structure-constants")
      o.backend = Backend::kStructureConstants;
    else
      b->fail("expected \"rewriting\" or \"structure-constants\"");
  }
  if (auto v = n.opt("vanishing")) {
    for (const Node& e : v->items()) o.vanishing.push_back({parse_terms(e, alphabet, f), {}});
  }
  o.cap = cap_override ? *cap_override : n.has("cap") ? n.at("cap").count() : default_cap;
  try {
    return Presentation::create(std::move(o));
  } catch (const InputError& e) {
    n.fail(e.what());
  }
}

std::map<Letter, Tensor> parse_images(const Node& n, const PresentationPtr& p,
                                      const std::function<Tensor(const Node&)>& parse_one) {
  std::map<Letter, Tensor> out;
  for (const auto& [key, value] : n.members()) out.emplace(generator_key(n, key, p), parse_one(value));
  return out;
}

std::map<Letter, Element> parse_element_images(const Node& n, const PresentationPtr& p, const PresentationPtr& target) {
  std::map<Letter, Element> out;
  for (const auto& [key, value] : n.members()) out.emplace(generator_key(n, key, p), parse_element(value, target));
  return out;
}

GeneratorMap parse_endomorphism(const Node& n, const PresentationPtr& p, const PresentationPtr& target, std::string name) {
  const TensorSpace s{Factor{target, false}};
  std::map<Letter, Tensor> images;
  for (const auto& [l, e] : parse_element_images(n, p, target)) images.emplace(l, Tensor::from_element(e));
  return GeneratorMap(p, s, std::move(images), std::move(name));
}

std::map<Letter, Scalar> parse_scalars(const Node& n, const PresentationPtr& p) {
  std::map<Letter, Scalar> out;
  for (const auto& [key, value] : n.members()) out.emplace(generator_key(n, key, p), parse_coeff(value, p->field()));
  return out;
}

const std::vector<std::string> kCommands = {
    "check-hopf-galois", "check-poisson",     "check-poisson-hg",   "check-poisson-hopf", "convert hopf-to-galois",
    "convert galois-to-hopf", "ore-extend",   "check-thm28",        "poisson-ore-extend", "check-thm44",
    "build-envelope",    "check-lemma55",     "check-thm59",        "pushforward"};

const std::initializer_list<const char*> kTopLevel = {"name",   "field",      "cap",         "algebra",  "mu",
                                                      "bracket", "hopf",      "alpha",       "ore",      "poisson_ore",
                                                      "envelope", "pushforward", "commands", "description"};

// Everything a command may need, built on first use.
class Context {
 public:
  explicit Context(const Job& job) : job_(job), root_(job.doc, "$") {
    field_ = root_.has("field") ? parse_field(root_.at("field")) : Field::rationals();
    const std::size_t cap = root_.has("cap") ? root_.at("cap").count() : kDefaultCap;
    algebra_ = parse_algebra(root_.at("algebra"), field_, cap, job.cap);
  }

  Field field() const { return field_; }
  const PresentationPtr& algebra() const { return algebra_; }
  const Node& root() const { return root_; }

  Node block(const std::string& key, const std::string& command) const {
    if (!root_.has(key)) throw InputError("command '" + command + "' needs a '" + key + "' block");
    return root_.at(key);
  }

  const HopfGaloisStructure& mu(const std::string& command) {
    if (!mu_) {
      if (root_.has("mu")) {
        const TensorSpace s3 = alternating_space(algebra_, 3);
        const Node n = root_.at("mu");
        mu_.emplace(GeneratorMap(algebra_, s3, parse_images(n, algebra_, [&](const Node& v) { return parse_tensor(v, s3, field_); }),
                                 "mu"));
      } else if (root_.has("hopf")) {
        mu_.emplace(hopf_to_galois(hopf(command)));
      } else {
        throw InputError("command '" + command + "' needs a 'mu' or 'hopf' block");
      }
    }
    return *mu_;
  }

  const PoissonStructure& bracket(const std::string& command) {
    if (!bracket_) {
      const Node n = block("bracket", command);
      PoissonStructure::Table table;
      for (const Node& e : n.items()) {
        e.allow_keys({"left", "right", "value"});
        const Letter a = parse_generator(e.at("left"), algebra_);
        const Letter b = parse_generator(e.at("right"), algebra_);
        if (a == b) e.fail("bracket of a generator with itself is zero");
        if (table.count({a, b}) || table.count({b, a})) e.fail("bracket given twice");
        table.emplace(std::make_pair(a, b), parse_element(e.at("value"), algebra_));
      }
      bracket_.emplace(algebra_, std::move(table), "bracket");
    }
    return *bracket_;
  }

  const HopfStructure& hopf(const std::string& command) {
    if (!hopf_) {
      const Node n = block("hopf", command);
      n.allow_keys({"delta", "counit", "antipode"});
      const TensorSpace s2 = plain_space(algebra_, 2);
      const TensorSpace op{Factor{algebra_, true}};
      GeneratorMap delta(algebra_, s2,
                         parse_images(n.at("delta"), algebra_, [&](const Node& v) { return parse_tensor(v, s2, field_); }),
                         "Delta");
      GeneratorMap counit = scalar_map(algebra_, parse_scalars(n.at("counit"), algebra_), "epsilon");
      std::map<Letter, Tensor> s;
      for (const auto& [l, e] : parse_element_images(n.at("antipode"), algebra_, algebra_)) s.emplace(l, Tensor::from_element(e, true));
      hopf_.emplace(std::move(delta), std::move(counit), GeneratorMap(algebra_, op, std::move(s), "S"));
    }
    return *hopf_;
  }

  std::size_t cap_of(const std::optional<Node>& n, std::size_t fallback) const {
    if (job_.cap) return *job_.cap;
    return n && n->has("cap") ? n->at("cap").count() : fallback;
  }

 private:
  const Job& job_;
  Node root_;
  Field field_ = Field::rationals();
  PresentationPtr algebra_;
  std::optional<HopfGaloisStructure> mu_;
  std::optional<PoissonStructure> bracket_;
  std::optional<HopfStructure> hopf_;
};

void add_map_results(CommandOutcome& out, const GeneratorMap& m, const std::string& name) {
  const PresentationPtr& p = m.source();
  for (std::size_t g = 0; g < p->alphabet().generator_count(); ++g) {
    const Letter l = make_letter(g, false);
    out.results.emplace_back(name + "(" + p->alphabet().letter_name(l) + ")", m.apply(Word{l}).to_string());
  }
}

void add_rule_results(CommandOutcome& out, const PresentationPtr& p, std::size_t first_generator) {
  for (const Rule& r : p->rules()) {
    if (r.lhs.empty() || generator_of(r.lhs[0]) < first_generator) continue;
    out.results.emplace_back("rule " + p->format(r.lhs), p->format(r.rhs));
  }
}

Element grouplike_of(const Node& block, const PresentationPtr& p) {
  if (!block.has("grouplike")) return Element::word(p, Word{make_letter(0, false)});
  return parse_element(block.at("grouplike"), p);
}

OreData parse_ore(const Node& n, const PresentationPtr& a, std::size_t cap) {
  n.allow_keys({"tau", "tau_inverse", "delta", "variable", "cap", "grouplike"});
  GeneratorMap tau = n.has("tau") ? parse_endomorphism(n.at("tau"), a, a, "tau") : GeneratorMap::identity(a);
  std::optional<GeneratorMap> inv;
  if (n.has("tau_inverse"))
    inv = parse_endomorphism(n.at("tau_inverse"), a, a, "tau^-1");
  else if (!n.has("tau"))
    inv = GeneratorMap::identity(a);
  std::map<Letter, Element> delta;
  if (n.has("delta")) delta = parse_element_images(n.at("delta"), a, a);
  TwistedDerivation d(a, tau, std::move(delta), "delta");
  return OreData{a, std::move(tau), std::move(inv), std::move(d), n.has("variable") ? n.at("variable").str() : "z", cap};
}

PoissonOreData parse_poisson_ore(const Node& n, const PoissonStructure& base, std::size_t cap) {
  n.allow_keys({"alpha", "delta", "variable", "cap", "grouplike"});
  const PresentationPtr& b = base.algebra();
  std::map<Letter, Element> alpha, delta;
  if (n.has("alpha")) alpha = parse_element_images(n.at("alpha"), b, b);
  if (n.has("delta")) delta = parse_element_images(n.at("delta"), b, b);
  return PoissonOreData{base, TwistedDerivation(b, std::nullopt, std::move(alpha), "alpha"),
                        TwistedDerivation(b, std::nullopt, std::move(delta), "delta"),
                        n.has("variable") ? n.at("variable").str() : "x", cap};
}

void run_command(Context& ctx, const std::string& command, CommandOutcome& out) {
  const PresentationPtr& a = ctx.algebra();
  if (command == "check-hopf-galois") {
    out.report = check_hopf_galois(ctx.mu(command));
  } else if (command == "check-poisson") {
    out.report = check_poisson(ctx.bracket(command));
  } else if (command == "check-poisson-hg") {
    out.report = check_poisson_hg(PoissonHopfGaloisStructure{ctx.bracket(command), ctx.mu(command)});
  } else if (command == "check-poisson-hopf") {
    out.report = check_poisson_hopf(PoissonHopfStructure{ctx.bracket(command), ctx.hopf(command)});
  } else if (command == "convert hopf-to-galois") {
    const HopfStructure& h = ctx.hopf(command);
    out.report = check_hopf_axioms(h);
    if (out.report.passed()) {
      const HopfGaloisStructure hg = hopf_to_galois(h);
      out.report.append(check_hopf_galois(hg));
      add_map_results(out, hg.mu, "mu");
    }
  } else if (command == "convert galois-to-hopf") {
    const Node n = ctx.block("alpha", command);
    const GeneratorMap alpha = scalar_map(a, parse_scalars(n, a), "alpha");
    const HopfStructure h = galois_to_hopf(ctx.mu(command), alpha);
    out.report = check_hopf_axioms(h);
    add_map_results(out, h.delta, "Delta");
    add_map_results(out, h.counit, "epsilon");
    add_map_results(out, h.antipode, "S");
  } else if (command == "ore-extend" || command == "check-thm28") {
    const Node n = ctx.block("ore", command);
    const OreData d = parse_ore(n, a, ctx.cap_of(n, kExtensionCap));
    if (command == "ore-extend") {
      out.report = check_ore_data(d);
      if (!out.report.passed()) return;
      const OreExtension ext = build_ore(d);
      const ConfluenceReport conf = ext.algebra->check_local_confluence();
      if (conf.confluent())
        out.report.pass("local confluence", "Ore extension relation", {d.variable},
                        std::to_string(conf.checked) + " critical pairs resolved");
      else
        out.report.fail("local confluence", "Ore extension relation", {d.variable}, conf.unresolved[0].description,
                        ext.algebra->format(conf.unresolved[0].left) + " vs " + ext.algebra->format(conf.unresolved[0].right));
      add_rule_results(out, ext.algebra, generator_of(ext.z));
      return;
    }
    const Element g = grouplike_of(n, a);
    const HopfGaloisStructure& h = ctx.mu(command);
    out.report = check_thm28(d, h, g);
    if (!out.report.passed()) return;
    const OreExtension ext = build_ore(d);
    const HopfGaloisStructure full = extend_mu_ore(d, ext, h, g);
    out.report.append(check_hopf_galois(full));
    out.results.emplace_back("mu(" + d.variable + ")", full.mu.apply(Word{ext.z}).to_string());
  } else if (command == "poisson-ore-extend" || command == "check-thm44") {
    const Node n = ctx.block("poisson_ore", command);
    const PoissonOreData d = parse_poisson_ore(n, ctx.bracket(command), ctx.cap_of(n, kExtensionCap));
    if (command == "poisson-ore-extend") {
      out.report = check_poisson_ore_data(d);
      if (!out.report.passed()) return;
      const PoissonOreExtension ext = build_poisson_ore(d);
      out.report.append(check_poisson(ext.poisson));
      for (std::size_t i = 0; i < a->alphabet().generator_count(); ++i) {
        const Letter l = make_letter(i, false);
        out.results.emplace_back("{" + d.variable + ", " + a->alphabet().letter_name(l) + "}",
                                 ext.poisson.letter_bracket(ext.x, l).to_string());
      }
      return;
    }
    const Element g = grouplike_of(n, a);
    const Thm44Result res = check_thm44(d, PoissonHopfGaloisStructure{ctx.bracket(command), ctx.mu(command)}, g);
    out.report = res.report;
    if (res.extension) {
      const PresentationPtr& r = res.extension->poisson.algebra();
      const Letter x = make_letter(r->alphabet().generator_count() - 1, false);
      out.results.emplace_back("mu(" + d.variable + ")", res.extension->hg.mu.apply(Word{x}).to_string());
    }
  } else if (command == "build-envelope" || command == "check-lemma55" || command == "check-thm59") {
    const std::optional<Node> env = ctx.root().opt("envelope");
    if (env) env->allow_keys({"cap", "sample"});
    const Envelope u = Envelope::build(ctx.bracket(command), ctx.cap_of(env, kEnvelopeCap));
    if (command == "build-envelope") {
      out.report.pass("local confluence", "Def 5.1", {},
                      std::to_string(u.confluence().checked) + " critical pairs resolved at cap " + std::to_string(u.cap()));
      out.report.append(check_envelope_relations(u));
      out.results.emplace_back("dimension of A", std::to_string(u.size()));
      out.results.emplace_back("rules", std::to_string(u.algebra()->rules().size()));
      out.results.emplace_back("side relations", std::to_string(u.side_relation_rank()));
      for (const Word& w : u.basis()) {
        const std::string name = a->alphabet().format(w);
        out.results.emplace_back("beta(" + name + ")", u.beta(w).to_string());
      }
    } else if (command == "check-lemma55") {
      std::vector<WordTuple> sample;
      if (env && env->has("sample")) {
        for (const Node& t : env->at("sample").items()) {
          WordTuple tuple;
          for (const Node& w : t.items()) tuple.push_back(parse_word(w, a->alphabet()));
          if (tuple.size() != 3) t.fail("sample entries must be triples of words");
          for (const Word& w : tuple) {
            if (std::find(u.basis().begin(), u.basis().end(), w) == u.basis().end())
              t.fail("word " + a->alphabet().format(w) + " is not a basis word");
          }
          sample.push_back(std::move(tuple));
        }
      } else {
        std::vector<Word> words{Word{}};
        for (std::size_t i = 0; i < a->alphabet().generator_count(); ++i) {
          const Word w{make_letter(i, false)};
          if (std::find(u.basis().begin(), u.basis().end(), w) != u.basis().end()) words.push_back(w);
        }
        sample = word_triples(words);
      }
      out.report = check_lemma55(u, sample);
      out.results.emplace_back("sampled triples", std::to_string(sample.size()));
    } else {
      out.report = check_thm59(PoissonHopfGaloisStructure{ctx.bracket(command), ctx.mu(command)}, u);
      for (const ReportEntry& e : out.report.entries()) {
        if (e.check == "condition (5.17)") out.results.emplace_back("verdict " + e.generators.at(0), e.detail);
        if (e.check == "Hopf-Galois verdict") out.results.emplace_back("verdict", e.detail);
      }
    }
  } else if (command == "pushforward") {
    const Node n = ctx.block("pushforward", command);
    n.allow_keys({"target", "map", "section", "ideal"});
    const Node root = ctx.root();
    const PresentationPtr b = parse_algebra(n.at("target"), ctx.field(), a->cap(), std::nullopt);
    const GeneratorMap f = parse_endomorphism(n.at("map"), a, b, "f");
    const GeneratorMap s = parse_endomorphism(n.at("section"), b, a, "section");
    if (root.has("bracket")) {
      std::vector<Element> ideal;
      if (n.has("ideal"))
        for (const Node& e : n.at("ideal").items()) ideal.push_back(parse_element(e, a));
      const PoissonHopfGaloisStructure ph =
          poisson_pushforward(PoissonHopfGaloisStructure{ctx.bracket(command), ctx.mu(command)}, f, s, ideal);
      out.report = check_hopf_galois(ph.hg);
      out.report.append(check_poisson_hg(ph));
      add_map_results(out, ph.hg.mu, "mu");
    } else {
      const HopfGaloisStructure h = pushforward(ctx.mu(command), f, s);
      out.report = check_hopf_galois(h);
      add_map_results(out, h.mu, "mu");
    }
  } else {
    throw InputError("unknown command '" + command + "'");
  }
}

}  // namespace

const std::vector<std::string>& known_commands() { return kCommands; }

Job parse_job(std::string_view text) {
  Job job;
  try {
    job.doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    // The parser's message carries the line and column.
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw InputError("job is not valid JSON: " + what);
  }
  const Node root(job.doc, "$");
  root.allow_keys(kTopLevel);
  job.name = root.has("name") ? root.at("name").str() : "job";
  root.at("algebra");
  for (const Node& c : root.at("commands").items()) {
    const std::string cmd = c.str();
    if (std::find(kCommands.begin(), kCommands.end(), cmd) == kCommands.end()) c.fail("unknown command '" + cmd + "'");
    job.commands.push_back(cmd);
  }
  if (job.commands.empty()) root.at("commands").fail("no commands");
  return job;
}

Job load_job_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read job file '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return parse_job(s.str());
}

bool JobOutcome::passed() const {
  return std::all_of(commands.begin(), commands.end(), [](const CommandOutcome& c) { return c.report.passed(); });
}

JobOutcome run_job(const Job& job) {
  Context ctx(job);
  JobOutcome out;
  out.job = job.name;
  out.field = ctx.field().name();
  for (const std::string& c : job.commands) {
    CommandOutcome co;
    co.command = c;
    run_command(ctx, c, co);
    out.commands.push_back(std::move(co));
  }
  return out;
}

}  // namespace hgalg
