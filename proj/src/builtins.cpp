#include "coxk3/builtins.hpp"

#include <map>

namespace coxk3::builtins {

namespace {

toric::Fan make_fan(int rank, std::initializer_list<std::initializer_list<long>> rays,
                    std::vector<std::vector<int>> cones) {
  toric::Fan f;
  f.lattice_rank = rank;
  for (const auto& r : rays) f.rays.push_back(make_vec(r));
  f.max_cones = std::move(cones);
  toric::validate(f);
  return f;
}

}  // namespace

toric::Fan p2() {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
}

toric::Fan p1xp1() {
  return make_fan(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

toric::Fan hirzebruch(long a) {
  if (a < 0) throw Error("hirzebruch: parameter must be nonnegative");
  toric::Fan f;
  f.lattice_rank = 2;
  f.rays = {make_vec({1, 0}), make_vec({0, 1}), IVec(2), make_vec({0, -1})};
  f.rays[2] << Int(-1), Int(a);
  f.max_cones = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  toric::validate(f);
  return f;
}

toric::Fan bl2_f4() {
  // ray order: (-4)-section, fiber over 0, fiber over infinity, first
  // exceptional, zero section, second exceptional
  return make_fan(2, {{0, 1}, {1, 0}, {-1, 4}, {1, -1}, {0, -1}, {-1, 3}},
                  {{0, 1}, {0, 2}, {1, 3}, {3, 4}, {2, 5}, {4, 5}});
}

toric::Fan sigma0() {
  return make_fan(3,
                  {{0, 0, -1},
                   {-1, -1, -2},
                   {1, 0, -1},
                   {-1, -1, -1},
                   {0, 0, 1},
                   {1, 0, 0},
                   {0, 1, -1}},
                  {{0, 1, 2},
                   {0, 1, 6},
                   {0, 2, 6},
                   {1, 2, 5},
                   {1, 3, 5},
                   {1, 3, 6},
                   {2, 5, 6},
                   {3, 4, 5},
                   {3, 4, 6},
                   {4, 5, 6}});
}

toric::Fan fan_by_name(const std::string& name) {
  std::string key = name;
  const std::string prefix = "builtin:";
  if (key.rfind(prefix, 0) == 0) key = key.substr(prefix.size());
  if (key == "P2") return p2();
  if (key == "F0") return p1xp1();
  if (key == "Bl2F4") return bl2_f4();
  if (key == "Sigma0") return sigma0();
  if (!key.empty() && key[0] == 'F') {
    try {
      return hirzebruch(std::stol(key.substr(1)));
    } catch (const std::invalid_argument&) {
    } catch (const std::out_of_range&) {
    }
  }
  throw Error("unknown builtin fan: " + name);
}

IMat published_matrix(const std::string& key) {
  if (key == "rhoX2i") return make_mat({{1, 0, 1, 0, 2}, {0, 1, 0, 1, 2}});
  if (key == "rhoX2ii") return make_mat({{1, 0, 2, 0, 3}, {0, 1, 4, 1, 6}});
  if (key == "rhoX2iii") return make_mat({{1, 0, -1, -1, -1}, {0, 1, 1, 1, 3}});
  if (key == "rhoX3i")
    return make_mat({{1, 0, 0, 1, 0, 2}, {0, 1, 0, 0, 1, 2}, {0, 0, 1, 1, 1, 3}});
  if (key == "rhoX3ii")
    return make_mat({{1, 0, 0, 2, 0, 3}, {0, 1, 0, 1, -1, 1}, {0, 0, 1, 3, 1, 5}});
  if (key == "rhoX4i")
    return make_mat({{1, 0, 0, 0, 1, 0, 2},
                     {0, 1, 0, 0, 0, 1, 2},
                     {0, 0, 1, 0, 1, 1, 3},
                     {0, 0, 0, 1, -1, -1, -1}});
  if (key == "rhoX4ii")
    return make_mat({{1, 0, 0, 0, 2, 0, 3},
                     {0, 1, 0, 0, 3, 1, 5},
                     {0, 0, 1, 0, 1, -1, 1},
                     {0, 0, 0, 1, 2, 1, 4}});
  if (key == "rhoX5i")
    return make_mat({{0, 0, 0, 0, 1, 1, 1, 1, 1, 1, -3},
                     {1, 0, 0, 0, -1, -1, -1, 0, 0, 0, 1},
                     {0, 1, 0, 0, -1, 0, 0, -1, -1, 0, 1},
                     {0, 0, 1, 0, 0, -1, 0, -1, 0, -1, 1},
                     {0, 0, 0, 1, 0, 0, -1, 0, -1, -1, 1}});
  if (key == "rhoX5ii")
    return make_mat({{1, 0, 0, 0, 0, 0, -2, 2, 1},
                     {0, 1, 0, 0, 0, 1, -2, 3, 4},
                     {0, 0, 1, 0, 0, -1, -1, 1, 0},
                     {0, 0, 0, 1, 0, 1, -1, 2, 4},
                     {0, 0, 0, 0, 1, 0, 1, -1, 1}});
  if (key == "f4bl3")
    return make_mat({{1, 0, 0, 0, 0, 0, -1, 1},
                     {0, 1, 0, 0, 0, 1, -2, 3},
                     {0, 0, 1, 0, 0, -1, -1, 1},
                     {0, 0, 0, 1, 0, 1, -1, 2},
                     {0, 0, 0, 0, 1, 0, 1, -1}});
  if (key == "bl2f4")
    return make_mat(
        {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 3, 1}, {0, 0, 1, 0, 1, -1}, {0, 0, 0, 1, 2, 1}});
  throw Error("unknown published matrix: " + key);
}

Polynomial published_rhoX5ii_relation() { return parse_polynomial("T2*T5 + T4*T6 + T7*T8", 9); }

graded::GradedPresentation base_presentation(const std::string& key) {
  graded::GradedPresentation pres;
  if (key == "F0") {
    pres.q = make_mat({{1, 0, 1, 0}, {0, 1, 0, 1}});
    return pres;
  }
  if (key == "F4") {
    // T1 the (-4)-section, T2/T4 fibers, T3 the zero section
    pres.q = make_mat({{1, 0, 1, 0}, {0, 1, 4, 1}});
    return pres;
  }
  if (key == "Bl1P2") {
    // T1 a line, T2/T3 lines through the blown point, T4 the exceptional
    pres.q = make_mat({{1, 1, 1, 0}, {0, -1, -1, 1}});
    return pres;
  }
  if (key == "Bl1F0") {
    pres.q = make_mat({{1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}, {0, 0, 1, 1, 1}});
    return pres;
  }
  if (key == "Bl1F4") {
    pres.q = make_mat({{1, 0, 0, 1, 0}, {0, 1, 0, 1, -1}, {0, 0, 1, 3, 1}});
    return pres;
  }
  if (key == "Bl2F0") {
    pres.q = make_mat(
        {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 0, 1}, {0, 0, 1, 0, 1, 1}, {0, 0, 0, 1, -1, -1}});
    return pres;
  }
  if (key == "Bl2F4") {
    pres.q = published_matrix("bl2f4");
    return pres;
  }
  if (key == "Bl3F4") {
    pres.q = published_matrix("f4bl3");
    pres.relations.emplace_back(parse_polynomial("T2*T4 + T3*T6 + T7*T8", 8));
    return pres;
  }
  if (key == "dP5") {
    pres.q = published_matrix("rhoX5i").leftCols(10);
    pres.relations.emplace_back(parse_polynomial("T2*T5 - T3*T6 + T4*T7", 10));
    pres.relations.emplace_back(parse_polynomial("T1*T5 - T3*T8 + T4*T9", 10));
    pres.relations.emplace_back(parse_polynomial("T1*T6 - T2*T8 + T4*T10", 10));
    pres.relations.emplace_back(parse_polynomial("T1*T7 - T2*T9 + T3*T10", 10));
    pres.relations.emplace_back(parse_polynomial("T5*T10 - T6*T9 + T7*T8", 10));
    return pres;
  }
  throw Error("unknown base presentation: " + key);
}

k3::CoverSpec cover_spec(const std::string& key) {
  k3::CoverSpec spec;
  auto canonical_of = [](const graded::GradedPresentation& pres) {
    return graded::canonical_class(pres);
  };
  if (key == "rhoX2i") {
    spec.base = base_presentation("F0");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 1;
    spec.section_label = "T5^2 - f";
    return spec;
  }
  if (key == "rhoX2ii") {
    spec.base = base_presentation("F4");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 2;
    spec.rational_component_class = make_vec({1, 0});
    spec.section_label = "T5^2 - f, f in C[T1^2,T2,T3,T4]";
    return spec;
  }
  if (key == "rhoX2iii") {
    spec.base = base_presentation("Bl1P2");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 1;
    spec.section_label = "T5^2 - f";
    return spec;
  }
  if (key == "rhoX3i") {
    spec.base = base_presentation("Bl1F0");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 1;
    spec.section_label = "T6^2 - f";
    return spec;
  }
  if (key == "rhoX3ii") {
    spec.base = base_presentation("Bl1F4");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 2;
    spec.rational_component_class = make_vec({1, 0, 0});
    spec.section_label = "T6^2 - f, f in C[T1^2,T2,...,T5]";
    return spec;
  }
  if (key == "rhoX4i") {
    spec.base = base_presentation("Bl2F0");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 1;
    spec.section_label = "T7^2 - f";
    return spec;
  }
  if (key == "rhoX4ii") {
    spec.base = base_presentation("Bl2F4");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 2;
    spec.rational_component_class = make_vec({1, 0, 0, 0});
    spec.section_label = "T7^2 - f, f in C[T1^2,T2,...,T6]";
    return spec;
  }
  if (key == "rhoX5i") {
    spec.base = base_presentation("dP5");
    // not a complete intersection: the canonical class is supplied directly
    spec.base_canonical = make_vec({-3, 1, 1, 1, 1});
    spec.branch_components = 1;
    spec.section_label = "T11^2 - g";
    return spec;
  }
  if (key == "rhoX5ii") {
    spec.base = base_presentation("Bl3F4");
    spec.base_canonical = canonical_of(spec.base);
    spec.branch_components = 2;
    spec.rational_component_class = make_vec({1, 0, 0, 0, 0});
    spec.section_label = "T9^2 - f, f in C[T1^2,T2,...,T8]";
    return spec;
  }
  throw Error("unknown cover spec: " + key);
}

}  // namespace coxk3::builtins
