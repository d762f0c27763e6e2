#pragma once

// Config parsing, command dispatch and JSON reports for the dlcombi tool.
// Simple-root and reflection indices are 1-based in documents and 0-based
// in the library.

#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "dl.hpp"
#include "fixed_points.hpp"
#include "quasi_isolated.hpp"
#include "verify.hpp"

namespace dlcombi::cli {

using json = nlohmann::json; // std::map objects: keys come out sorted

inline constexpr const char *kVersion = "0.1.0";

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline std::string config_hash(const json &doc) {
  std::ostringstream os;
  os << std::hex;
  os.width(16);
  os.fill('0');
  os << fnv1a64(doc.dump());
  return os.str();
}

struct Config {
  json doc; // document after overrides, as hashed
  bool has_datum = false;
  BasedRootDatum datum;
  Integer q = 0;
  std::vector<std::size_t> phi;
  std::optional<IntMatrix> phi_y;
  std::optional<Integer> ell;
  unsigned threads = 1;
  std::size_t max_pairs = 200000;

  std::optional<Word> w, twist, psi1, psi2;
  std::optional<std::vector<Word>> seq, radicals;
  std::optional<std::size_t> j;
  std::optional<IntVector> mu;
  std::optional<std::vector<std::size_t>> levi, automorphism;
  std::optional<Integer> p;
  std::vector<int> c_flags;
  RatVector torus_part;
  std::optional<std::string> group;
};

namespace detail {

[[noreturn]] inline void bad(const std::string &path, const std::string &msg) {
  fail(ErrorCode::ValidationError, "at " + path + ": " + msg);
}

inline Integer as_integer(const json &v, const std::string &path) {
  if (v.is_number_unsigned())
    return Integer(v.get<std::uint64_t>());
  if (v.is_number_integer())
    return Integer(v.get<std::int64_t>());
  if (v.is_string()) {
    const auto &s = v.get_ref<const std::string &>();
    std::size_t k = (!s.empty() && s[0] == '-') ? 1 : 0;
    bool digits = s.size() > k;
    for (std::size_t i = k; i < s.size(); ++i)
      digits = digits && std::isdigit(static_cast<unsigned char>(s[i]));
    if (digits)
      return Integer(s);
  }
  bad(path, "expected an integer");
}

inline long long as_small(const json &v, const std::string &path, long long lo,
                          long long hi) {
  Integer x = as_integer(v, path);
  if (x < lo || x > hi)
    bad(path, "value " + x.str() + " outside [" + std::to_string(lo) + ", " +
                  std::to_string(hi) + "]");
  return static_cast<long long>(x);
}

inline const json &as_array(const json &v, const std::string &path) {
  if (!v.is_array())
    bad(path, "expected an array");
  return v;
}

inline IntVector int_list(const json &v, const std::string &path) {
  IntVector out;
  const auto &a = as_array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(as_integer(a[i], path + "/" + std::to_string(i)));
  return out;
}

/// 1-based index list -> 0-based, each in [1, n].
inline std::vector<std::size_t> index_list(const json &v, const std::string &path,
                                           std::size_t n) {
  std::vector<std::size_t> out;
  const auto &a = as_array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(static_cast<std::size_t>(
                      as_small(a[i], path + "/" + std::to_string(i), 1,
                               static_cast<long long>(n))) -
                  1);
  return out;
}

inline IntMatrix int_matrix(const json &v, const std::string &path) {
  std::vector<IntVector> rows;
  const auto &a = as_array(v, path);
  for (std::size_t i = 0; i < a.size(); ++i)
    rows.push_back(int_list(a[i], path + "/" + std::to_string(i)));
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() != rows[0].size())
      bad(path + "/" + std::to_string(i), "ragged matrix row");
  return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

inline Rational as_rational(const json &v, const std::string &path) {
  if (v.is_number_integer())
    return Rational(as_integer(v, path));
  if (!v.is_string())
    bad(path, "expected a rational such as \"1/3\"");
  const auto &s = v.get_ref<const std::string &>();
  auto slash = s.find('/');
  if (slash == std::string::npos)
    return Rational(as_integer(v, path));
  Integer num = as_integer(json(s.substr(0, slash)), path);
  Integer den = as_integer(json(s.substr(slash + 1)), path);
  if (den == 0)
    bad(path, "zero denominator");
  return Rational(num, den);
}

inline const std::set<std::string> &known_keys() {
  static const std::set<std::string> keys = {
      "datum", "q",    "phi",   "phi_y", "ell",  "threads", "max_pairs",
      "w",     "seq",  "j",     "mu",    "levi", "radicals", "twist",
      "psi1",  "psi2", "auto",  "p",     "c",    "torus_part", "group"};
  return keys;
}

inline BasedRootDatum parse_datum(const json &v) {
  if (v.is_string()) {
    try {
      return preset(v.get<std::string>());
    } catch (const Error &e) {
      bad("/datum", e.what());
    }
  }
  if (!v.is_object())
    bad("/datum", "expected a preset name or {\"simple_roots\", \"simple_coroots\"}");
  for (auto it = v.begin(); it != v.end(); ++it)
    if (it.key() != "simple_roots" && it.key() != "simple_coroots" && it.key() != "name")
      bad("/datum/" + it.key(), "unknown field");
  if (!v.contains("simple_roots") || !v.contains("simple_coroots"))
    bad("/datum", "explicit datum needs simple_roots and simple_coroots");
  std::vector<IntVector> r, c;
  const auto &ra = as_array(v["simple_roots"], "/datum/simple_roots");
  const auto &ca = as_array(v["simple_coroots"], "/datum/simple_coroots");
  for (std::size_t i = 0; i < ra.size(); ++i)
    r.push_back(int_list(ra[i], "/datum/simple_roots/" + std::to_string(i)));
  for (std::size_t i = 0; i < ca.size(); ++i)
    c.push_back(int_list(ca[i], "/datum/simple_coroots/" + std::to_string(i)));
  std::string name = "custom";
  if (v.contains("name")) {
    if (!v["name"].is_string())
      bad("/datum/name", "expected a string");
    name = v["name"].get<std::string>();
  }
  return make_datum(std::move(r), std::move(c), name);
}

} // namespace detail

inline Config parse_config(const json &doc) {
  using namespace detail;
  if (!doc.is_object())
    bad("/", "config must be a JSON object");
  for (auto it = doc.begin(); it != doc.end(); ++it)
    if (!known_keys().count(it.key()))
      bad("/" + it.key(), "unknown field");
  Config c;
  c.doc = doc;
  if (doc.contains("datum")) {
    c.datum = parse_datum(doc["datum"]);
    c.has_datum = true;
  }
  const std::size_t s = c.datum.semisimple_rank();
  const std::size_t n = c.datum.rank;
  if (doc.contains("q")) {
    c.q = as_integer(doc["q"], "/q");
    if (c.q < 2 || !prime_of_power(c.q))
      bad("/q", c.q.str() + " is not a prime power");
  }
  if (doc.contains("phi")) {
    if (!c.has_datum)
      bad("/phi", "needs a datum");
    c.phi = index_list(doc["phi"], "/phi", s);
    if (c.phi.size() != s)
      bad("/phi", "expected " + std::to_string(s) + " entries");
    std::vector<std::size_t> sorted = c.phi;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < s; ++i)
      if (sorted[i] != i)
        bad("/phi", "not a permutation");
  }
  if (doc.contains("phi_y")) {
    c.phi_y = int_matrix(doc["phi_y"], "/phi_y");
    if (c.phi_y->rows() != n || c.phi_y->cols() != n)
      bad("/phi_y", "expected a " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  }
  if (doc.contains("ell")) {
    c.ell = as_integer(doc["ell"], "/ell");
    if (*c.ell < 2)
      bad("/ell", "expected a prime");
    auto pp = prime_of_power(*c.ell);
    if (!pp || *pp != *c.ell)
      bad("/ell", c.ell->str() + " is not a prime");
  }
  if (doc.contains("threads"))
    c.threads = static_cast<unsigned>(as_small(doc["threads"], "/threads", 0, 1024));
  if (doc.contains("max_pairs"))
    c.max_pairs = static_cast<std::size_t>(
        as_small(doc["max_pairs"], "/max_pairs", 1, 100000000));

  auto need_datum = [&](const char *key) {
    if (!c.has_datum)
      bad(std::string("/") + key, "needs a datum");
  };
  auto word = [&](const char *key) -> std::optional<Word> {
    if (!doc.contains(key))
      return std::nullopt;
    need_datum(key);
    return index_list(doc[key], std::string("/") + key, s);
  };
  auto words = [&](const char *key) -> std::optional<std::vector<Word>> {
    if (!doc.contains(key))
      return std::nullopt;
    need_datum(key);
    std::vector<Word> out;
    const auto &a = as_array(doc[key], std::string("/") + key);
    for (std::size_t i = 0; i < a.size(); ++i)
      out.push_back(index_list(a[i], std::string("/") + key + "/" + std::to_string(i), s));
    return out;
  };
  c.w = word("w");
  c.twist = word("twist");
  c.psi1 = word("psi1");
  c.psi2 = word("psi2");
  c.seq = words("seq");
  if (c.seq && c.seq->empty())
    bad("/seq", "sequence must be non-empty");
  c.radicals = words("radicals");
  if (c.radicals && c.radicals->empty())
    bad("/radicals", "sequence must be non-empty");
  if (doc.contains("levi")) {
    need_datum("levi");
    c.levi = index_list(doc["levi"], "/levi", s);
  }
  if (doc.contains("j"))
    c.j = static_cast<std::size_t>(as_small(doc["j"], "/j", 1, 1000000));
  if (doc.contains("mu")) {
    need_datum("mu");
    c.mu = int_list(doc["mu"], "/mu");
    if (c.mu->size() != n)
      bad("/mu", "expected " + std::to_string(n) + " entries");
  }
  if (doc.contains("auto")) {
    need_datum("auto");
    c.automorphism = index_list(doc["auto"], "/auto", s);
    if (c.automorphism->size() != s)
      bad("/auto", "expected " + std::to_string(s) + " entries");
  }
  if (doc.contains("p")) {
    c.p = as_integer(doc["p"], "/p");
    auto pp = c.p >= 2 ? prime_of_power(*c.p) : std::nullopt;
    if (!pp || *pp != *c.p)
      bad("/p", c.p->str() + " is not a prime");
  }
  if (doc.contains("c")) {
    for (auto &x : int_list(doc["c"], "/c")) {
      if (x != 0 && x != 1)
        bad("/c", "flags must be 0 or 1");
      c.c_flags.push_back(static_cast<int>(x));
    }
  }
  if (doc.contains("torus_part")) {
    need_datum("torus_part");
    const auto &a = as_array(doc["torus_part"], "/torus_part");
    for (std::size_t i = 0; i < a.size(); ++i)
      c.torus_part.push_back(as_rational(a[i], "/torus_part/" + std::to_string(i)));
    if (c.torus_part.size() != n)
      bad("/torus_part", "expected " + std::to_string(n) + " entries");
  }
  if (doc.contains("group")) {
    if (!doc["group"].is_string())
      bad("/group", "expected a string");
    c.group = doc["group"].get<std::string>();
  }
  return c;
}

inline json parse_document(const std::string &text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error &e) {
    fail(ErrorCode::ParseError, e.what());
  }
}

inline json read_document(const std::string &path) {
  std::ifstream in(path);
  if (!in)
    fail(ErrorCode::ValidationError, "cannot read config file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str());
}

// ------------------------------------------------------------ encoding

namespace detail {

inline json jint(const Integer &x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max())
    return json(static_cast<std::int64_t>(x));
  return json(x.str());
}

inline json jvec(const IntVector &v) {
  json a = json::array();
  for (auto &x : v)
    a.push_back(jint(x));
  return a;
}

inline json jmat(const IntMatrix &m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j)
      row.push_back(jint(m(i, j)));
    a.push_back(row);
  }
  return a;
}

inline json jword(const Word &w) {
  json a = json::array();
  for (auto i : w)
    a.push_back(i + 1);
  return a;
}

inline json jroot(const RootSystem &rs, RootIndex a) {
  json v = json::array();
  for (auto x : rs.coords(a))
    v.push_back(x);
  return v;
}

inline json jroots(const RootSystem &rs, const RootSet &s) {
  json a = json::array();
  for (auto x : s)
    a.push_back(jroot(rs, x));
  return a;
}

inline json jelement(const WeylGroup &W, WeylElement x) { return jword(W.word(x)); }

inline void require_key(bool present, const std::string &key, const std::string &cmd) {
  if (!present)
    bad("/" + key, "required by '" + cmd + "'");
}

} // namespace detail

// ------------------------------------------------------------ commands

struct Outcome {
  json result;
  bool verification_failed = false;
};

inline ContextPtr make_context(const Config &c, const std::string &cmd) {
  detail::require_key(c.has_datum, "datum", cmd);
  detail::require_key(c.q != 0, "q", cmd);
  return GroupContext::create(c.datum, FrobeniusSpec{c.q, c.phi, c.phi_y});
}

inline WeylElement element_of(const ContextPtr &ctx, const std::optional<Word> &w) {
  return w ? ctx->weyl().from_word(*w) : ctx->weyl().identity();
}

inline json run_datum(const Config &c) {
  using namespace detail;
  auto ctx = make_context(c, "datum");
  const auto &d = ctx->datum();
  const auto &rs = ctx->roots();
  json r;
  r["name"] = d.name;
  r["rank"] = d.rank;
  r["semisimple_rank"] = d.semisimple_rank();
  r["cartan"] = jmat(d.cartan());
  r["type"] = cartan_type_name(d.cartan());
  json sr = json::array(), sc = json::array();
  for (auto &v : d.simple_roots)
    sr.push_back(jvec(v));
  for (auto &v : d.simple_coroots)
    sc.push_back(jvec(v));
  r["simple_roots"] = sr;
  r["simple_coroots"] = sc;
  r["num_roots"] = rs.size();
  r["positive_roots"] = jroots(rs, rs.positive_roots());
  r["weyl_order"] = ctx->weyl().order();
  r["q"] = jint(ctx->q());
  r["p"] = jint(ctx->p());
  r["phi_y"] = jmat(ctx->phi_y());
  r["f_classes"] = f_conjugacy_classes(*ctx).size();
  return r;
}

inline json run_torus(const Config &c) {
  using namespace detail;
  auto ctx = make_context(c, "torus");
  auto t = make_torus(ctx, element_of(ctx, c.w));
  json r;
  r["w"] = jelement(ctx->weyl(), t->w());
  r["order"] = jint(t->order());
  r["period"] = t->period();
  r["modulus"] = jint(t->modulus());
  json f = json::array();
  for (auto &x : t->group().invariant_factors())
    f.push_back(jint(x));
  r["invariant_factors"] = f;
  r["presentation_y"] = jmat(t->presentation_y());
  return r;
}

inline json pair_json(const SeriesPair &p) {
  using namespace detail;
  const auto &W = p.context()->weyl();
  auto g = weyl_groups_of_theta(p);
  json r;
  r["w"] = jelement(W, p.w());
  r["mu"] = jvec(p.mu());
  r["theta_order"] = jint(p.order());
  r["coroot_kernel"] = coroot_kernel(p).size();
  r["w_circ_order"] = g.order_circ();
  r["w_order"] = g.order_full();
  return r;
}

inline json run_series(const Config &c, const std::string &sub) {
  if (sub != "enumerate")
    fail(ErrorCode::ValidationError, "unknown series subcommand '" + sub + "'");
  auto ctx = make_context(c, "series enumerate");
  auto e = enumerate_series(ctx, {c.threads, c.max_pairs});
  json labels = json::array();
  for (std::size_t k = 0; k < e.rational.size(); ++k) {
    json l = pair_json(e.rational[k].representative);
    l["index"] = k;
    l["members"] = e.rational[k].members.size();
    labels.push_back(l);
  }
  json r;
  r["count"] = e.rational.size();
  r["geometric_count"] = e.geometric.size();
  r["geometric"] = e.geometric;
  r["labels"] = labels;
  return r;
}

inline RootSet radical_from_word(const ContextPtr &ctx, const RootSet &levi, const Word &x) {
  const auto &W = ctx->weyl();
  return normalized(W.act(W.from_word(x), set_difference(ctx->roots().positive_roots(), levi)));
}

inline RootSet levi_of(const ContextPtr &ctx, const Config &c) {
  return c.levi ? ctx->weyl().standard_levi(*c.levi) : RootSet{};
}

inline RadicalSequence frame_of(const ContextPtr &ctx, const Config &c, const std::string &cmd) {
  if (c.seq && !c.radicals)
    return borel_radical_sequence(make_sequence(ctx, *c.seq));
  detail::require_key(c.radicals.has_value(), "radicals", cmd);
  auto levi = levi_of(ctx, c);
  std::vector<RootSet> psi;
  for (auto &x : *c.radicals)
    psi.push_back(radical_from_word(ctx, levi, x));
  return make_radical_sequence(ctx, levi, psi, element_of(ctx, c.twist));
}

inline json run_dl(const Config &c, const std::string &sub) {
  using namespace detail;
  const std::string cmd = "dl " + sub;
  auto ctx = make_context(c, cmd);
  const auto &W = ctx->weyl();
  json r;
  if (sub == "defect") {
    require_key(c.seq.has_value(), "seq", cmd);
    require_key(c.j.has_value(), "j", cmd);
    auto s = make_sequence(ctx, *c.seq);
    r["j"] = *c.j;
    r["d_j"] = defect(s, *c.j);
    r["inversion_pair_set"] =
        jroots(ctx->roots(), W.inversion_pair_set(s.w[*c.j - 2], s.w[*c.j - 1]));
    return r;
  }
  if (sub == "predicate-p") {
    require_key(c.seq.has_value(), "seq", cmd);
    require_key(c.j.has_value(), "j", cmd);
    require_key(c.mu.has_value(), "mu", cmd);
    auto s = make_sequence(ctx, *c.seq);
    TorusCharacter theta(make_torus(ctx, s.product()), *c.mu);
    r["j"] = *c.j;
    r["P"] = predicate_P(s, *c.j, theta);
    return r;
  }
  if (sub == "theod") {
    require_key(c.j.has_value(), "j", cmd);
    require_key(c.mu.has_value(), "mu", cmd);
    auto frame = frame_of(ctx, c, cmd);
    TorusCharacter theta(make_torus(ctx, c.w ? element_of(ctx, c.w) : frame.twist), *c.mu);
    r["j"] = *c.j;
    r["holds"] = theod_condition(frame, *c.j, theta);
    return r;
  }
  if (sub == "condition-c") {
    require_key(c.psi1.has_value(), "psi1", cmd);
    require_key(c.psi2.has_value(), "psi2", cmd);
    require_key(c.mu.has_value(), "mu", cmd);
    auto levi = levi_of(ctx, c);
    auto twist = element_of(ctx, c.twist);
    auto a = radical_from_word(ctx, levi, *c.psi1);
    auto b = radical_from_word(ctx, levi, *c.psi2);
    auto frame = make_radical_sequence(ctx, levi, {a}, twist);
    TorusCharacter theta(make_torus(ctx, c.w ? element_of(ctx, c.w) : twist), *c.mu);
    r["holds"] = condition_C(frame, a, b, theta);
    r["psi1"] = jroots(ctx->roots(), a);
    r["psi2"] = jroots(ctx->roots(), b);
    return r;
  }
  if (sub == "transitivity") {
    require_key(c.j.has_value(), "j", cmd);
    auto frame = frame_of(ctx, c, cmd);
    auto prod = transitivity_conditions(frame, *c.j);
    r["j"] = *c.j;
    r["product_conditions"] = json(std::vector<bool>(prod.begin(), prod.end()));
    if (c.seq && !c.radicals) {
      auto len = transitivity_conditions(make_sequence(ctx, *c.seq), *c.j);
      r["length_conditions"] = json(std::vector<bool>(len.begin(), len.end()));
    }
    return r;
  }
  fail(ErrorCode::ValidationError, "unknown dl subcommand '" + sub + "'");
}

inline json run_fold(const Config &c) {
  using namespace detail;
  auto ctx = make_context(c, "fold");
  DatumAutomorphism g;
  if (c.automorphism)
    g.perm = *c.automorphism;
  g.torus_part = c.torus_part;
  g.c_flags = c.c_flags;
  g.p = c.p ? *c.p : ctx->p();
  auto f = folded_datum(ctx, g);
  const auto &rs = ctx->roots();
  json orbits = json::array();
  for (std::size_t k = 0; k < f.orbits.orbits.size(); ++k) {
    if (!f.orbits.positive[k])
      continue;
    json o;
    o["roots"] = jroots(rs, f.orbits.orbits[k]);
    o["type"] = f.orbits.type_a[k] ? "a" : "b";
    o["c_one"] = bool(f.orbits.c_one[k]);
    o["kept"] = bool(f.orbits.kept[k]);
    if (f.orbits.kept[k])
      o["coroot"] = jvec(f.orbits.coroot[k]);
    orbits.push_back(o);
  }
  const auto &fd = f.folded->datum();
  json r;
  r["order"] = f.g.order;
  r["p"] = jint(g.p);
  r["orbits"] = orbits;
  json folded;
  folded["type"] = f.type;
  folded["rank"] = fd.rank;
  folded["semisimple_rank"] = fd.semisimple_rank();
  folded["cartan"] = jmat(fd.cartan());
  folded["basis"] = jmat(f.basis);
  folded["weyl_order"] = f.folded->weyl().order();
  json co = json::array();
  for (auto &v : fixed_coroot_system(*ctx, f.g))
    co.push_back(jvec(v));
  folded["coroots"] = co;
  r["folded"] = folded;
  return r;
}

inline json run_jordan(const Config &c) {
  using namespace detail;
  require_key(c.mu.has_value(), "mu", "jordan");
  require_key(c.ell.has_value(), "ell", "jordan");
  auto ctx = make_context(c, "jordan");
  TorusCharacter theta(make_torus(ctx, element_of(ctx, c.w)), *c.mu);
  auto rep = jordan_report(theta, *c.ell);
  const auto &W = ctx->weyl();
  json r;
  r["ell"] = jint(rep.ell);
  r["theta_order"] = jint(rep.theta_order);
  r["levi"] = jroots(ctx->roots(), rep.levi);
  r["levi_is_whole"] = rep.levi_is_whole;
  json comp;
  comp["order"] = rep.component.order;
  comp["abelian"] = rep.component.abelian;
  comp["order_prime_to_ell"] = rep.component.order_prime_to_ell;
  comp["theta_order_prime_to_ell"] = rep.component.theta_order_prime_to_ell;
  json reps = json::array();
  for (auto x : rep.component.coset_reps)
    reps.push_back(jelement(W, x));
  comp["coset_reps"] = reps;
  r["component_group"] = comp;
  json rel = json::array();
  for (auto x : rep.relative)
    rel.push_back(jelement(W, x));
  r["relative_quotient"] = rel;
  r["regular"] = rep.regular;
  r["super_regular"] = rep.super_regular;
  r["w_circ_order"] = rep.w_circ_order;
  r["w_order"] = rep.w_full_order;
  r["hypotheses_hold"] = rep.hypotheses_hold;
  r["weyl_level"] = rep.weyl_level;
  return r;
}

inline Outcome run_oracle(const Config &c, const std::string &sub) {
  using namespace detail;
  if (sub != "verify")
    fail(ErrorCode::ValidationError, "unknown oracle subcommand '" + sub + "'");
  std::string group = c.group ? *c.group : (c.has_datum ? c.datum.name : "");
  require_key(!group.empty(), "group", "oracle verify");
  require_key(c.q != 0, "q", "oracle verify");
  if (c.q > 5)
    bad("/q", "oracle comparison needs q in {2, 3, 4, 5}");
  auto rep = verify_series_partition(group, static_cast<int>(c.q));
  Outcome o;
  o.result["status"] = rep.pass ? "pass" : "fail";
  o.result["core"] = rep.core;
  o.result["oracle"] = rep.oracle;
  o.result["group"] = rep.preset;
  o.result["dual_family"] = rep.dual_family;
  o.result["q"] = rep.q;
  o.verification_failed = !rep.pass;
  return o;
}

inline Outcome run(const std::string &command, const std::string &sub, const Config &c) {
  Outcome o;
  if (command == "datum")
    o.result = run_datum(c);
  else if (command == "torus")
    o.result = run_torus(c);
  else if (command == "series")
    o.result = run_series(c, sub);
  else if (command == "dl")
    o.result = run_dl(c, sub);
  else if (command == "fold")
    o.result = run_fold(c);
  else if (command == "jordan")
    o.result = run_jordan(c);
  else if (command == "oracle")
    o = run_oracle(c, sub);
  else
    fail(ErrorCode::ValidationError, "unknown command '" + command + "'");
  return o;
}

/// Full report document for one invocation.
inline json report(const std::string &command, const std::string &sub, const Config &c,
                   const Outcome &o) {
  json r;
  r["command"] = sub.empty() ? command : command + " " + sub;
  r["config_hash"] = config_hash(c.doc);
  r["version"] = kVersion;
  r["result"] = o.result;
  return r;
}

inline json error_report(const Error &e) {
  json r;
  r["error"]["code"] = std::string(code_name(e.code()));
  r["error"]["message"] = e.what();
  r["version"] = kVersion;
  return r;
}

/// Exit status for an error: 2 for bad input, 3 for everything else.
inline int exit_code(const Error &e) {
  return e.code() == ErrorCode::ParseError || e.code() == ErrorCode::ValidationError ? 2 : 3;
}

/// Override value from the command line: JSON if it parses, a list of
/// integers if comma separated, a plain string otherwise.
inline json override_value(const std::string &key, const std::string &text) {
  static const std::set<std::string> list_keys = {"phi", "w",    "mu",   "levi", "auto",
                                                  "c",   "twist", "psi1", "psi2"};
  json v;
  try {
    v = json::parse(text);
  } catch (const json::parse_error &) {
    if (text.find(',') != std::string::npos) {
      v = json::array();
      std::stringstream ss(text);
      std::string item;
      while (std::getline(ss, item, ','))
        v.push_back(detail::jint(detail::as_integer(json(item), "/" + key)));
    } else {
      v = text;
    }
  }
  if (list_keys.count(key) && v.is_number())
    v = json::array({v});
  return v;
}

} // namespace dlcombi::cli
