#include "lagcorr/json_io.hpp"

#include <fstream>
#include <sstream>

#include "lagcorr/error.hpp"

namespace lagcorr::json_io {

namespace {

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) fail(std::string("expected an object holding '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) fail(std::string("missing field '") + key + "'");
  return *it;
}

long as_long(const Json& j, const char* what) {
  if (!j.is_number_integer()) fail(std::string("'") + what + "' must be an integer, got " + j.dump());
  return j.get<long>();
}

std::string as_string(const Json& j, const char* what) {
  if (!j.is_string()) fail(std::string("'") + what + "' must be a string, got " + j.dump());
  return j.get<std::string>();
}

const Json& as_array(const Json& j, const char* what) {
  if (!j.is_array()) fail(std::string("'") + what + "' must be an array, got " + j.dump());
  return j;
}

mpq_class decode_rational(const Json& j, const char* what) {
  if (j.is_number_integer()) return mpq_class(j.get<long>());
  const GaussianRational x = decode_scalar(j);
  if (!x.is_real()) fail(std::string("'") + what + "' must be real");
  return x.re();
}

// Rethrow errors from value constructors as parse errors with context.
template <class F>
auto with_context(const std::string& context, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Parse) throw;
    fail(context + ": " + e.what());
  }
}

}  // namespace

Json parse(const std::string& text, const std::string& source) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(source + ": JSON syntax error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open '" + path + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse(buffer.str(), path);
}

Json encode(const GaussianRational& x) { return x.to_string(); }

GaussianRational decode_scalar(const Json& j) {
  if (j.is_number_integer()) return GaussianRational(j.get<long>());
  if (!j.is_string()) fail("scalar must be a string or integer, got " + j.dump());
  return GaussianRational::parse(j.get<std::string>());
}

namespace {

Json encode_terms(const std::map<long, GaussianRational>& terms) {
  Json out = Json::array();
  for (const auto& [e, c] : terms) out.push_back(Json::array({e, c.re().get_str(), c.im().get_str()}));
  return out;
}

std::map<long, GaussianRational> decode_terms(const Json& j) {
  std::map<long, GaussianRational> out;
  for (const auto& t : as_array(j, "terms")) {
    if (!t.is_array() || t.size() < 2 || t.size() > 3) fail("term must be [exponent, re, im], got " + t.dump());
    const long e = as_long(t[0], "exponent");
    const mpq_class re = decode_rational(t[1], "re");
    const mpq_class im = t.size() == 3 ? decode_rational(t[2], "im") : mpq_class(0);
    out[e] += GaussianRational(re, im);
  }
  return out;
}

}  // namespace

Json encode(const QLaurent& x) { return encode_terms(x.terms()); }

QLaurent decode_laurent(const Json& j) { return QLaurent(decode_terms(j)); }

Json encode(const QSeries& x) {
  return Json{{"terms", encode(x.terms)}, {"order", x.order}, {"certified_finite", x.certified_finite}};
}

QSeries decode_qseries(const Json& j) {
  if (j.is_array()) fail("q-series needs an object with 'terms' and 'order'");
  QSeries out;
  out.terms = decode_laurent(field(j, "terms"));
  out.order = as_long(field(j, "order"), "order");
  if (j.contains("certified_finite")) out.certified_finite = j["certified_finite"].get<bool>();
  if (!out.terms.is_zero() && out.terms.max_exponent() > out.order) fail("q-series has terms beyond its order");
  return out;
}

Json encode(const HSeries& x) { return Json{{"terms", encode_terms(x.coeffs())}, {"truncation_order", x.order()}}; }

HSeries decode_hseries(const Json& j) {
  const long order = as_long(field(j, "truncation_order"), "truncation_order");
  auto terms = decode_terms(field(j, "terms"));
  if (!terms.empty() && terms.rbegin()->first > order) fail("hbar-series has terms beyond truncation_order");
  return HSeries(std::move(terms), order);
}

Json encode(const QRational& x) {
  return Json{{"numerator", encode(x.numerator())}, {"denominator", encode(x.denominator())}};
}

QRational decode_qrational(const Json& j) {
  const QLaurent num = decode_laurent(field(j, "numerator"));
  const QLaurent den = decode_laurent(field(j, "denominator"));
  return with_context("rational function", [&] { return QRational(num, den); });
}

Json encode(const Partition& x) { return Json(x.parts()); }

Partition decode_partition(const Json& j) {
  std::vector<int> parts;
  for (const auto& part : as_array(j, "partition")) parts.push_back(static_cast<int>(as_long(part, "part")));
  return with_context("partition", [&] { return Partition(parts); });
}

Json encode(const IntVector& x) { return Json(x.coords()); }

IntVector decode_vector(const Json& j) {
  std::vector<std::int64_t> coords;
  for (const auto& c : as_array(j, "vector")) coords.push_back(as_long(c, "coordinate"));
  return IntVector(std::move(coords));
}

Json encode(const ContactData& x) {
  Json out = Json::array();
  for (const auto& [v, m] : x.support()) out.push_back(Json{{"v", encode(v)}, {"mult", m}});
  return out;
}

ContactData decode_contact(const Json& j) {
  ContactData::Support support;
  for (const auto& entry : as_array(j, "contact")) {
    const IntVector v = decode_vector(field(entry, "v"));
    support[v] += static_cast<int>(as_long(field(entry, "mult"), "mult"));
  }
  return with_context("contact data", [&] { return ContactData(support); });
}

Json encode(const CurveClass& x) {
  Json dots = Json::array();
  for (const auto& [v, d] : x.dots()) dots.push_back(Json{{"v", encode(v)}, {"dot", d}});
  return Json{{"dots", dots}, {"energy", x.energy().get_str()}};
}

CurveClass decode_curve_class(const Json& j) {
  CurveClass::Intersections dots;
  for (const auto& entry : as_array(field(j, "dots"), "dots")) {
    dots[decode_vector(field(entry, "v"))] += as_long(field(entry, "dot"), "dot");
  }
  if (!j.contains("energy")) return with_context("curve class", [&] { return CurveClass(dots); });
  const mpq_class energy = decode_rational(j["energy"], "energy");
  return with_context("curve class", [&] { return CurveClass(dots, energy); });
}

Json encode(const ObjectId& x) {
  switch (x.kind) {
    case ObjectId::Kind::Point:
      return Json{{"kind", "Point"}};
    case ObjectId::Kind::Hilb:
      return Json{{"kind", "Hilb"}, {"n", x.n}};
    case ObjectId::Kind::StackY:
      return Json{{"kind", "StackY"}, {"mu", encode(x.mu)}};
    case ObjectId::Kind::YPower:
      return Json{{"kind", "YPower"}, {"mu", encode(x.mu)}};
    case ObjectId::Kind::StackCoproduct:
      return Json{{"kind", "StackCoproduct"}, {"n", x.n}};
  }
  return Json();
}

ObjectId decode_object(const Json& j) {
  const std::string kind = as_string(field(j, "kind"), "kind");
  if (kind == "Point") return ObjectId::point();
  if (kind == "Hilb") return with_context("object", [&] { return ObjectId::hilb(static_cast<int>(as_long(field(j, "n"), "n"))); });
  if (kind == "StackY") return ObjectId::stack(decode_partition(field(j, "mu")));
  if (kind == "YPower") return ObjectId::ypower(decode_partition(field(j, "mu")));
  if (kind == "StackCoproduct") {
    return with_context("object", [&] { return ObjectId::stack_coproduct(static_cast<int>(as_long(field(j, "n"), "n"))); });
  }
  fail("unknown object kind '" + kind + "'");
}

Json encode(const Generator& x) {
  if (x.kind == GenKind::IdHilb) return Json{{"name", x.name()}, {"n", x.n}};
  return Json{{"name", x.name()}, {"mu", encode(x.mu)}};
}

Generator decode_generator(const Json& j) {
  const std::string name = as_string(field(j, "name"), "name");
  if (name == "IdHilb") {
    const long n = as_long(field(j, "n"), "n");
    if (n < 0) fail("IdHilb needs n >= 0");
    return Generator::id_hilb(static_cast<int>(n));
  }
  const Partition mu = decode_partition(field(j, "mu"));
  if (name == "Delta") return Generator::delta(mu);
  if (name == "DeltaDagger") return Generator::delta_dagger(mu);
  if (name == "IdStack") return Generator::id_stack(mu);
  if (name == "Ell") return Generator::ell(mu);
  if (name == "LSigma") return Generator::l_sigma(mu);
  if (name == "SigmaMu") return Generator::sigma_mu(mu);
  if (name == "E") return Generator::e(mu);
  fail("unknown generator '" + name + "'");
}

namespace {

Json encode_combination(const LinearCombination& x) {
  Json out = Json::array();
  for (const auto& [g, c] : x) out.push_back(Json{{"gen", encode(g)}, {"coeff", encode(c)}});
  return out;
}

LinearCombination decode_combination(const Json& j) {
  LinearCombination out;
  for (const auto& t : as_array(j, "terms")) {
    auto& slot = out[decode_generator(field(t, "gen"))];
    slot += decode_scalar(field(t, "coeff"));
  }
  std::erase_if(out, [](const auto& entry) { return entry.second.is_zero(); });
  return out;
}

}  // namespace

Json encode(const Corr& x) {
  Json terms = Json::array();
  for (const auto& [g, c] : x.terms()) terms.push_back(Json{{"gen", encode(g)}, {"coeff", encode(c)}});
  return Json{{"domain", encode(x.domain())}, {"codomain", encode(x.codomain())}, {"strict", x.strict()},
              {"terms", terms}};
}

Corr decode_corr(const Json& j) {
  Corr out(decode_object(field(j, "domain")), decode_object(field(j, "codomain")));
  for (const auto& [g, c] : decode_combination(field(j, "terms"))) {
    with_context("element", [&] {
      out.add(g, c);
      return 0;
    });
  }
  if (j.contains("strict") && j["strict"].get<bool>()) {
    with_context("element", [&] {
      out.set_strict();
      return 0;
    });
  }
  return out;
}

Json encode(const RelationTable& x) {
  Json rules = Json::array();
  for (const auto& [key, rule] : x.rules()) {
    rules.push_back(Json{{"left", encode(rule.left)},
                         {"right", encode(rule.right)},
                         {"via", encode(rule.via)},
                         {"result", encode_combination(rule.result)},
                         {"source", rule.source}});
  }
  Json rewrites = Json::array();
  for (const auto& [target, rw] : x.rewrites()) {
    rewrites.push_back(
        Json{{"target", encode(rw.target)}, {"replacement", encode_combination(rw.replacement)}, {"source", rw.source}});
  }
  return Json{{"rules", rules}, {"rewrites", rewrites}};
}

RelationTable decode_table(const Json& j) {
  RelationTable out;
  for (const auto& r : as_array(field(j, "rules"), "rules")) {
    Rule rule{decode_generator(field(r, "left")), decode_generator(field(r, "right")), decode_object(field(r, "via")),
              decode_combination(field(r, "result")), r.value("source", std::string())};
    with_context("rule", [&] {
      out.add_rule(rule);
      return 0;
    });
  }
  if (j.contains("rewrites")) {
    for (const auto& r : as_array(j["rewrites"], "rewrites")) {
      out.add_rewrite({decode_generator(field(r, "target")), decode_combination(field(r, "replacement")),
                       r.value("source", std::string())});
    }
  }
  return out;
}

Json encode(const FockElement& x) {
  Json terms = Json::array();
  for (const auto& [key, c] : x.terms()) {
    terms.push_back(Json{{"beta", encode(key.beta)}, {"p", encode(key.p)}, {"labels", key.labels}, {"hseries", encode(c)}});
  }
  return Json{{"energy_cutoff", x.energy_cutoff().get_str()}, {"hbar_order", x.hbar_order()}, {"terms", terms}};
}

FockElement decode_fock(const Json& j) {
  FockElement out(decode_rational(field(j, "energy_cutoff"), "energy_cutoff"),
                  as_long(field(j, "hbar_order"), "hbar_order"));
  for (const auto& t : as_array(field(j, "terms"), "terms")) {
    std::vector<std::string> labels;
    for (const auto& l : as_array(field(t, "labels"), "labels")) labels.push_back(as_string(l, "label"));
    const CurveClass beta = decode_curve_class(field(t, "beta"));
    const ContactData p = decode_contact(field(t, "p"));
    const HSeries c = decode_hseries(field(t, "hseries"));
    with_context("Fock term", [&] {
      out.add(beta, p, labels, c);
      return 0;
    });
  }
  return out;
}

Json encode(const PairingTable& x) {
  Json out = Json::array();
  for (const auto& e : x) {
    out.push_back(Json{{"p", encode(e.p)}, {"pt_label", e.pt_label}, {"gw_label", e.gw_label}, {"coeff", encode(e.coeff)}});
  }
  return out;
}

PairingTable decode_pairing(const Json& j) {
  PairingTable out;
  for (const auto& e : as_array(j, "pairing")) {
    out.push_back({decode_contact(field(e, "p")), as_string(field(e, "pt_label"), "pt_label"),
                   as_string(field(e, "gw_label"), "gw_label"), decode_scalar(field(e, "coeff"))});
  }
  return out;
}

Json encode(const IntegralityReport& x) {
  Json out{{"phase_exponent", x.phase_exponent},
           {"phase", encode(x.phase)},
           {"rational", x.rational},
           {"symmetric", x.symmetric},
           {"literal_symmetric", x.literal_symmetric},
           {"gaussian_integral", x.gaussian_integral}};
  out["reconstruction"] = x.reconstruction ? encode(*x.reconstruction) : Json();
  return out;
}

Json encode(const UnitarityReport& x) {
  Json failing = Json::array();
  for (const auto& mu : x.failing_blocks) failing.push_back(encode(mu));
  return Json{{"n", x.n},
              {"partitions", x.partitions_checked},
              {"forward_ok", x.forward_ok},
              {"backward_ok", x.backward_ok},
              {"failing_blocks", failing},
              {"forward", x.forward_result},
              {"backward", x.backward_result}};
}

}  // namespace lagcorr::json_io
