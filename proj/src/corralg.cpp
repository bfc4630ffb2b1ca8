#include "lagcorr/corralg.hpp"

#include <algorithm>

namespace lagcorr {

ObjectId ObjectId::hilb(int n) {
  if (n < 0) throw Error(ErrorCode::ObjectMismatch, "Hilb(n) needs n >= 0");
  return {Kind::Hilb, n, Partition()};
}

ObjectId ObjectId::stack_coproduct(int n) {
  if (n < 0) throw Error(ErrorCode::ObjectMismatch, "coproduct needs n >= 0");
  return {Kind::StackCoproduct, n, Partition()};
}

bool ObjectId::contains(const ObjectId& summand) const {
  if (*this == summand) return true;
  return kind == Kind::StackCoproduct && summand.kind == Kind::StackY && summand.n == n;
}

std::string ObjectId::to_string() const {
  switch (kind) {
    case Kind::Point:
      return "Point";
    case Kind::Hilb:
      return "Hilb(" + std::to_string(n) + ")";
    case Kind::StackY:
      return "StackY" + mu.to_string();
    case Kind::YPower:
      return "YPower" + mu.to_string();
    case Kind::StackCoproduct:
      return "StackCoproduct(" + std::to_string(n) + ")";
  }
  return "?";
}

ObjectId Generator::domain() const {
  switch (kind) {
    case GenKind::Delta:
    case GenKind::IdStack:
      return ObjectId::stack(mu);
    case GenKind::SigmaMu:
    case GenKind::LSigma:
      return ObjectId::point();
    default:
      return ObjectId::hilb(n);
  }
}

ObjectId Generator::codomain() const {
  switch (kind) {
    case GenKind::DeltaDagger:
    case GenKind::IdStack:
    case GenKind::SigmaMu:
      return ObjectId::stack(mu);
    default:
      return ObjectId::hilb(n);
  }
}

std::int64_t Generator::lift_multiplicity() const {
  switch (kind) {
    case GenKind::SigmaMu:
    case GenKind::IdStack:
      return mu.part_product();
    default:
      return 1;
  }
}

std::optional<Generator> Generator::adjoint() const {
  switch (kind) {
    case GenKind::Delta:
      return delta_dagger(mu);
    case GenKind::DeltaDagger:
      return delta(mu);
    case GenKind::IdHilb:
    case GenKind::IdStack:
    case GenKind::Ell:
    case GenKind::E:
      return *this;
    default:
      return std::nullopt;
  }
}

std::string Generator::name() const {
  switch (kind) {
    case GenKind::Delta: return "Delta";
    case GenKind::DeltaDagger: return "DeltaDagger";
    case GenKind::IdHilb: return "IdHilb";
    case GenKind::IdStack: return "IdStack";
    case GenKind::Ell: return "Ell";
    case GenKind::LSigma: return "LSigma";
    case GenKind::SigmaMu: return "SigmaMu";
    case GenKind::E: return "E";
  }
  return "?";
}

std::string Generator::to_string() const {
  if (kind == GenKind::IdHilb) return name() + "(" + std::to_string(n) + ")";
  return name() + mu.to_string();
}

void RelationTable::add_rule(Rule rule) {
  if (!(rule.left.codomain() == rule.right.domain())) {
    throw Error(ErrorCode::ObjectMismatch, "rule " + rule.left.to_string() + " then " + rule.right.to_string() +
                                               " is not composable");
  }
  for (const auto& [g, c] : rule.result) {
    if (!(g.domain() == rule.left.domain()) || !(g.codomain() == rule.right.codomain())) {
      throw Error(ErrorCode::ObjectMismatch, "rule result " + g.to_string() + " has the wrong shape");
    }
  }
  auto key = std::make_pair(rule.left, rule.right);
  rules_.insert_or_assign(std::move(key), std::move(rule));
}

void RelationTable::add_rewrite(Rewrite rewrite) {
  const Generator target = rewrite.target;
  rewrites_.insert_or_assign(target, std::move(rewrite));
}

const Rule* RelationTable::find(const Generator& left, const Generator& right) const {
  auto it = rules_.find({left, right});
  return it == rules_.end() ? nullptr : &it->second;
}

Rule* RelationTable::mutable_rule(const Generator& left, const Generator& right) {
  auto it = rules_.find({left, right});
  return it == rules_.end() ? nullptr : &it->second;
}

bool RelationTable::defines(const Generator& left, const Generator& right) const {
  if (!(left.codomain() == right.domain())) return false;
  return left.is_identity() || right.is_identity() || find(left, right) != nullptr;
}

LinearCombination RelationTable::compose(const Generator& left, const Generator& right) const {
  if (!(left.codomain() == right.domain())) {
    throw Error(ErrorCode::ObjectMismatch, left.to_string() + " then " + right.to_string());
  }
  if (left.is_identity()) return {{right, GaussianRational(1)}};
  if (right.is_identity()) return {{left, GaussianRational(1)}};
  const Rule* rule = find(left, right);
  if (!rule) {
    throw Error(ErrorCode::UnknownComposition, "no rule for " + left.to_string() + " then " + right.to_string());
  }
  if (rule->via.kind != ObjectId::Kind::YPower) return rule->result;
  const GaussianRational scale(mpq_class(1, z_mu(rule->via.mu)));
  LinearCombination out;
  for (const auto& [g, c] : rule->result) out.emplace(g, c * scale);
  return out;
}

LinearCombination RelationTable::normalize(const LinearCombination& x) const {
  LinearCombination current = x;
  for (int round = 0; round < 64; ++round) {
    bool changed = false;
    LinearCombination next;
    auto accumulate = [&next](const Generator& g, const GaussianRational& c) {
      auto& slot = next[g];
      slot += c;
      if (slot.is_zero()) next.erase(g);
    };
    for (const auto& [g, c] : current) {
      auto it = rewrites_.find(g);
      if (it == rewrites_.end()) {
        accumulate(g, c);
        continue;
      }
      changed = true;
      for (const auto& [h, k] : it->second.replacement) accumulate(h, c * k);
    }
    current = std::move(next);
    if (!changed) return current;
  }
  throw Error(ErrorCode::UnknownComposition, "rewrite system does not terminate");
}

RelationTable RelationTable::standard(int n_max, bool derived) {
  RelationTable table;
  const GaussianRational one(1);
  for (int n = 0; n <= n_max; ++n) {
    const auto parts = enumerate_partitions(n);
    for (const auto& mu : parts) {
      const GaussianRational sign(cycle_sign(mu));
      const GaussianRational z(z_mu(mu));
      for (const auto& nu : parts) {
        LinearCombination r1;
        if (mu == nu) r1.emplace(Generator::id_stack(mu), sign);
        table.add_rule({Generator::delta(mu), Generator::delta_dagger(nu), ObjectId::hilb(n), r1, "R1"});
      }
      table.add_rule({Generator::delta_dagger(mu), Generator::delta(mu), ObjectId::ypower(mu),
                      {{Generator::e(mu), z}}, "R2"});
      table.add_rule({Generator::sigma_mu(mu), Generator::delta(mu), ObjectId::ypower(mu),
                      {{Generator::l_sigma(mu), z}}, "R4"});
    }

    // sum_mu sign(mu) E(mu) = IdHilb(n), solved for E(1^n).
    LinearCombination replacement{{Generator::id_hilb(n), one}};
    const Partition ones = Partition::ones(n);
    for (const auto& mu : parts) {
      if (mu == ones) continue;
      replacement.emplace(Generator::e(mu), GaussianRational(-cycle_sign(mu)));
    }
    table.add_rewrite({Generator::e(ones), replacement, "R3"});

    if (!derived) continue;
    const ObjectId hilb = ObjectId::hilb(n);
    for (const auto& mu : parts) {
      const GaussianRational sign(cycle_sign(mu));
      for (const auto& nu : parts) {
        auto when = [&](const Generator& g) {
          return mu == nu ? LinearCombination{{g, sign}} : LinearCombination{};
        };
        table.add_rule({Generator::delta(nu), Generator::e(mu), hilb, when(Generator::delta(mu)), "derived"});
        table.add_rule({Generator::e(mu), Generator::delta_dagger(nu), hilb, when(Generator::delta_dagger(mu)),
                        "derived"});
        table.add_rule({Generator::e(mu), Generator::e(nu), hilb, when(Generator::e(mu)), "derived"});
        table.add_rule({Generator::l_sigma(mu), Generator::delta_dagger(nu), hilb, when(Generator::sigma_mu(mu)),
                        "derived"});
        table.add_rule({Generator::l_sigma(mu), Generator::e(nu), hilb, when(Generator::l_sigma(mu)), "derived"});
      }
    }
  }
  return table;
}

GaussianRational l_coefficient(const Partition& mu) {
  long exponent = 0;
  for (int part : mu.parts()) exponent += part - 1;
  return GaussianRational::i_pow(exponent);
}

Corr build_L(int n) {
  Corr out(ObjectId::stack_coproduct(n), ObjectId::hilb(n));
  for (const auto& mu : enumerate_partitions(n)) out.add(Generator::delta(mu), l_coefficient(mu));
  return out;
}

Corr build_L_dagger(int n) { return dagger(build_L(n)); }

Corr block_identity(int n) {
  Corr out(ObjectId::stack_coproduct(n), ObjectId::stack_coproduct(n));
  for (const auto& mu : enumerate_partitions(n)) out.add(Generator::id_stack(mu), GaussianRational(1));
  return out;
}

UnitarityReport verify_unitarity(int n, const RelationTable& table) {
  UnitarityReport report;
  report.n = n;
  const Corr L = build_L(n);
  const Corr Ld = build_L_dagger(n);
  const auto parts = enumerate_partitions(n);
  report.partitions_checked = parts.size();

  const Corr forward = normalize(star(L, Ld, table), table);
  const Corr expected_forward = block_identity(n);
  report.forward_result = forward.to_string();
  report.forward_ok = forward == expected_forward;
  for (const auto& mu : parts) {
    auto block_matches = [&](const Corr& x) {
      LinearCombination out;
      for (const auto& [g, c] : x.terms()) {
        if (g.domain() == ObjectId::stack(mu)) out.emplace(g, c);
      }
      return out;
    };
    if (block_matches(forward) != block_matches(expected_forward)) report.failing_blocks.push_back(mu);
  }

  const Corr backward = normalize(star(Ld, L, table), table);
  const Corr expected_backward = normalize(Corr::single(Generator::id_hilb(n), GaussianRational(1)), table);
  report.backward_result = backward.to_string();
  report.backward_ok = backward == expected_backward;
  if (!report.backward_ok) {
    for (const auto& [g, c] : backward.terms()) {
      if (g.kind == GenKind::IdHilb) continue;
      if (std::find(report.failing_blocks.begin(), report.failing_blocks.end(), g.mu) == report.failing_blocks.end()) {
        report.failing_blocks.push_back(g.mu);
      }
    }
  }
  return report;
}

std::string EllDecomposition::to_string() const {
  std::string out = std::to_string(leading) + "*Ell" + mu.to_string();
  for (const auto& lower : unknown_lower) out += " + c[" + lower.to_string() + "," + mu.to_string() + "]*Ell" + lower.to_string();
  return out;
}

EllDecomposition decompose(const Generator& e) {
  if (e.kind != GenKind::E) throw Error(ErrorCode::ObjectMismatch, "decompose expects E(mu), got " + e.to_string());
  EllDecomposition out;
  out.mu = e.mu;
  out.leading = aut_order(e.mu);
  for (const auto& coarse : enumerate_partitions(e.n)) {
    if (coarse != e.mu && join_leq(coarse, e.mu)) out.unknown_lower.push_back(coarse);
  }
  out.stack_normalization = GaussianRational(mpq_class(1, z_mu(e.mu)));
  return out;
}

}  // namespace lagcorr
