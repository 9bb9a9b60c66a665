#include "qproof/families.hpp"

namespace qproof {

namespace {

// Variable ids for gen_phi.
int e_var(int i) { return 4 * (i - 1) + 1; }
int u_var(int i) { return 4 * (i - 1) + 2; }
int c_odd(int i) { return 4 * (i - 1) + 3; }   // c_(2i-1)
int c_even(int i) { return 4 * (i - 1) + 4; }  // c_(2i)

AnnLit alit(const Qbf& f, Lit l,
            std::initializer_list<std::pair<int, bool>> entries = {}) {
  AnnLit out{l, {}};
  for (const auto& [v, val] : entries) out.ann.set(f, v, val);
  return out;
}

Annotation assignment(const Qbf& f,
                      std::initializer_list<std::pair<int, bool>> entries) {
  Annotation a;
  for (const auto& [v, val] : entries) a.set(f, v, val);
  return a;
}

}  // namespace

Qbf gen_phi(int n) {
  if (n < 1) throw std::invalid_argument("family index must be positive");
  Qbf f;
  int first = f.add_block(Quant::Exists);
  f.declare_in_block(e_var(1), first);
  for (int i = 1; i <= n; ++i) {
    int ub = f.add_block(Quant::Forall);
    f.declare_in_block(u_var(i), ub);
    int eb = f.add_block(Quant::Exists);
    f.declare_in_block(c_odd(i), eb);
    f.declare_in_block(c_even(i), eb);
    if (i < n) f.declare_in_block(e_var(i + 1), eb);
  }
  for (int i = 1; i <= n; ++i) {
    f.add_clause({u_var(i), c_even(i)});
    f.add_clause({-e_var(i), c_odd(i)});
  }
  Clause wide;
  for (int i = 1; i <= n; ++i) {
    wide.push_back(-c_odd(i));
    wide.push_back(-c_even(i));
  }
  f.add_clause(std::move(wide));
  for (int i = 1; i <= n; ++i) {
    f.add_clause({e_var(i), c_even(i)});
    f.add_clause({-u_var(i), c_odd(i)});
  }
  return f;
}

ExpansionProof gen_phi_proof(int n) {
  if (n < 1) throw std::invalid_argument("family index must be positive");
  Qbf f = gen_phi(n);
  ExpansionProof p;
  p.calculus = Calculus::IrCalc;

  auto axiom = [&](int id, int clause_index) {
    ExpansionStep s;
    s.id = id;
    s.kind = ExpansionStep::Kind::Axiom;
    s.input_clause = clause_index;
    s.result = axiom_ircalc(f, clause_index);
    p.steps.push_back(std::move(s));
  };
  auto res = [&](int id, int p1, int p2, AnnLit pivot, AnnClause result) {
    ExpansionStep s;
    s.id = id;
    s.kind = ExpansionStep::Kind::Res;
    s.parent = p1;
    s.parent2 = p2;
    s.pivot = std::move(pivot);
    s.result = canonical_ann_clause(std::move(result));
    p.steps.push_back(std::move(s));
  };
  auto inst = [&](int id, int parent, Annotation sigma, AnnClause result) {
    ExpansionStep s;
    s.id = id;
    s.kind = ExpansionStep::Kind::Inst;
    s.parent = parent;
    s.sigma = std::move(sigma);
    s.result = canonical_ann_clause(std::move(result));
    p.steps.push_back(std::move(s));
  };

  // Axiom download of every input clause, in input order.
  for (int k = 1; k <= 4 * n + 1; ++k) axiom(k, k);

  // Input indices: (u_i v c_2i) = 2i-1, (-e_i v c_2i-1) = 2i, wide = 2n+1,
  // (e_i v c_2i) = 2n+2i, (-u_i v c_2i-1) = 2n+2i+1.
  auto earlier = [&](int i) {
    AnnClause out;
    for (int t = 1; t < i; ++t) {
      out.push_back(alit(f, -c_odd(t)));
      out.push_back(alit(f, -c_even(t)));
    }
    return out;
  };

  // Blocks are cleared right to left; each block consumes its two long-
  // clause literals and re-derives the shortened remainder.
  int next_id = 4 * n + 2;
  int remainder_id = 2 * n + 1;  // the wide clause's axiom step
  for (int i = n; i >= 1; --i) {
    AnnClause rest = earlier(i);
    int g = next_id++, h = next_id++, gi = next_id++, hi = next_id++,
        x = next_id++, y = next_id++, z = next_id++;

    AnnClause g_result = rest;
    g_result.push_back(alit(f, -e_var(i)));
    g_result.push_back(alit(f, -c_even(i)));
    res(g, 2 * i, remainder_id, alit(f, c_odd(i)), g_result);

    AnnClause h_result = rest;
    h_result.push_back(alit(f, e_var(i)));
    h_result.push_back(alit(f, -c_odd(i)));
    res(h, 2 * n + 2 * i, remainder_id, alit(f, c_even(i)), h_result);

    AnnClause gi_result = rest;
    gi_result.push_back(alit(f, -e_var(i)));
    gi_result.push_back(alit(f, -c_even(i), {{u_var(i), false}}));
    inst(gi, g, assignment(f, {{u_var(i), false}}), gi_result);

    AnnClause hi_result = rest;
    hi_result.push_back(alit(f, e_var(i)));
    hi_result.push_back(alit(f, -c_odd(i), {{u_var(i), true}}));
    inst(hi, h, assignment(f, {{u_var(i), true}}), hi_result);

    AnnClause x_result = rest;
    x_result.push_back(alit(f, -e_var(i)));
    res(x, gi, 2 * i - 1, alit(f, -c_even(i), {{u_var(i), false}}), x_result);

    AnnClause y_result = rest;
    y_result.push_back(alit(f, e_var(i)));
    res(y, hi, 2 * n + 2 * i + 1, alit(f, -c_odd(i), {{u_var(i), true}}),
        y_result);

    res(z, x, y, alit(f, -e_var(i)), rest);
    remainder_id = z;
  }
  return p;
}

Qbf gen_psi0() {
  Qbf f;
  int b1 = f.add_block(Quant::Forall);
  f.declare_in_block(1, b1);
  int b2 = f.add_block(Quant::Exists);
  f.declare_in_block(2, b2);
  int b3 = f.add_block(Quant::Forall);
  f.declare_in_block(3, b3);
  int b4 = f.add_block(Quant::Exists);
  f.declare_in_block(4, b4);
  f.declare_in_block(5, b4);
  f.add_clause({-1, -2, -3, 5});
  f.add_clause({-1, -3, -4});
  f.add_clause({2, -3, 4});
  f.add_clause({1, -2});
  f.add_clause({-1, -2, -5});
  return f;
}

ExpansionProof gen_psi0_proof() {
  Qbf f = gen_psi0();
  ExpansionProof p;
  p.calculus = Calculus::IrCalc;

  auto step = [&](ExpansionStep s) {
    s.result = canonical_ann_clause(std::move(s.result));
    p.steps.push_back(std::move(s));
  };

  for (int k = 1; k <= 5; ++k) {
    ExpansionStep s;
    s.id = k;
    s.kind = ExpansionStep::Kind::Axiom;
    s.input_clause = k;
    s.result = axiom_ircalc(f, k);
    step(std::move(s));
  }

  ExpansionStep s6;
  s6.id = 6;
  s6.kind = ExpansionStep::Kind::Inst;
  s6.parent = 3;
  s6.sigma = assignment(f, {{1, true}});
  s6.result = {alit(f, 2, {{1, true}}), alit(f, 4, {{1, true}, {3, true}})};
  step(std::move(s6));

  ExpansionStep s7;
  s7.id = 7;
  s7.kind = ExpansionStep::Kind::Res;
  s7.parent = 6;
  s7.parent2 = 2;
  s7.pivot = alit(f, 4, {{1, true}, {3, true}});
  s7.result = {alit(f, 2, {{1, true}})};
  step(std::move(s7));

  ExpansionStep s8;
  s8.id = 8;
  s8.kind = ExpansionStep::Kind::Res;
  s8.parent = 7;
  s8.parent2 = 5;
  s8.pivot = alit(f, 2, {{1, true}});
  s8.result = {alit(f, -5, {{1, true}})};
  step(std::move(s8));

  ExpansionStep s9;
  s9.id = 9;
  s9.kind = ExpansionStep::Kind::Res;
  s9.parent = 7;
  s9.parent2 = 1;
  s9.pivot = alit(f, 2, {{1, true}});
  s9.result = {alit(f, 5, {{1, true}, {3, true}})};
  step(std::move(s9));

  ExpansionStep s10;
  s10.id = 10;
  s10.kind = ExpansionStep::Kind::Inst;
  s10.parent = 8;
  s10.sigma = assignment(f, {{3, true}});
  s10.result = {alit(f, -5, {{1, true}, {3, true}})};
  step(std::move(s10));

  ExpansionStep s11;
  s11.id = 11;
  s11.kind = ExpansionStep::Kind::Res;
  s11.parent = 9;
  s11.parent2 = 10;
  s11.pivot = alit(f, 5, {{1, true}, {3, true}});
  step(std::move(s11));

  return p;
}

}  // namespace qproof
