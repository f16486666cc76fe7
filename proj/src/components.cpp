#include "lb3/components.hpp"

#include <algorithm>
#include <set>

#include "lb3/errors.hpp"

namespace lb3 {

std::string to_string(const AlphaTuple& alpha) {
  return "(" + std::to_string(alpha.a) + "," + std::to_string(alpha.b) + ";" +
         std::to_string(alpha.x) + "," + std::to_string(alpha.y) + "," +
         std::to_string(alpha.z) + ")";
}

const char* to_string(Density d) {
  switch (d) {
    case Density::Yes: return "YES";
    case Density::No: return "NO";
    case Density::UnknownDegenerate: return "UNKNOWN-degenerate";
  }
  return "?";
}

long long component_dimension(const AlphaTuple& al) {
  const long long n = al.n();
  const long long sq = static_cast<long long>(al.a) * al.a + static_cast<long long>(al.b) * al.b +
                       static_cast<long long>(al.x) * al.x + static_cast<long long>(al.y) * al.y +
                       static_cast<long long>(al.z) * al.z;
  return 1 + n * n - sq;
}

Density irreducible_density(const AlphaTuple& al) {
  if (!al.consistent()) throw DegenerateAlpha("irreducible_density: inconsistent tuple");
  const int n = al.n();
  if (n == 0) return Density::UnknownDegenerate;
  if (n == 1) return Density::Yes;  // single-point component, one scalar rep
  if (al.x > 0 && al.y > 0 && al.z > 0) {
    const int mx = std::max({al.x, al.y, al.z});
    const int mn = std::min(al.a, al.b);
    return mx <= mn ? Density::Yes : Density::No;
  }
  // Degenerate multiplicities: only the (w,w;0,w,w) family is certified.
  if (al.x == 0 && al.y == al.z && al.a == al.y && al.b == al.y) return Density::Yes;
  return Density::UnknownDegenerate;
}

bool generically_decomposable(const AlphaTuple& al) {
  return al.x == 0 && al.y >= 2 && al.y == al.z && al.a == al.y && al.b == al.y;
}

AlphaTuple mu6_generator_action(const AlphaTuple& al) {
  return {al.b, al.a, al.z, al.x, al.y};
}

std::vector<AlphaTuple> mu6_orbit(const AlphaTuple& alpha) {
  std::vector<AlphaTuple> orbit;
  AlphaTuple cur = alpha;
  for (int k = 0; k < 6; ++k) {
    if (std::find(orbit.begin(), orbit.end(), cur) == orbit.end()) orbit.push_back(cur);
    cur = mu6_generator_action(cur);
  }
  return orbit;
}

B3NormalForm b3_normal_form(const AlphaTuple& alpha) {
  std::optional<AlphaTuple> best;
  for (const AlphaTuple& m : mu6_orbit(alpha)) {
    if (m.a < m.b) continue;
    if (m.x != std::max({m.x, m.y, m.z})) continue;
    if (!best || m < *best) best = m;
  }
  // The orbit contains every combination of (a,b)-swap and cyclic shift of
  // (x,y,z), so a member with a >= b and x maximal always exists.
  if (!best) throw Error("b3_normal_form: orbit has no admissible member");
  return {*best, best->b >= best->x};
}

std::optional<UVW> gamma_extends(const AlphaTuple& al) {
  if (al.y != al.z) return std::nullopt;
  const int w = al.y;
  const int u = al.b - w;
  const int v = al.a - w;
  if (u < 0 || v < 0) return std::nullopt;
  if (al.x != u + v) return std::nullopt;
  if (w < std::max(u, v)) return std::nullopt;
  return UVW{u, v, w};
}

std::optional<UVWAssignment> b3_extends(const AlphaTuple& alpha) {
  const AlphaTuple swapped{alpha.b, alpha.a, alpha.x, alpha.y, alpha.z};
  for (const AlphaTuple& cand : {alpha, swapped}) {
    const std::array<int, 3> slots{cand.x, cand.y, cand.z};
    for (int slot = 0; slot < 3; ++slot) {
      const int uv = slots[slot];
      const int w1 = slots[(slot + 1) % 3];
      const int w2 = slots[(slot + 2) % 3];
      if (w1 != w2) continue;
      const int w = w1;
      const int u = cand.b - w;
      const int v = cand.a - w;
      if (u < 0 || v < 0) continue;
      if (u + v != uv) continue;
      if (w < std::max(u, v)) continue;
      return UVWAssignment{UVW{u, v, w}, slot};
    }
  }
  return std::nullopt;
}

std::vector<AlphaTuple> all_alpha_tuples(int n) {
  std::vector<AlphaTuple> out;
  for (int a = 0; a <= n; ++a) {
    const int b = n - a;
    for (int x = 0; x <= n; ++x)
      for (int y = 0; y + x <= n; ++y) out.push_back({a, b, x, y, n - x - y});
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

ComponentRecord make_record(const AlphaTuple& al) {
  ComponentRecord rec;
  rec.alpha = al;
  rec.n = al.n();
  rec.dim = component_dimension(al);
  rec.irreducible_dense = irreducible_density(al);
  rec.gamma_extends = gamma_extends(al);
  rec.b3_extends = b3_extends(al);
  return rec;
}

}  // namespace

std::vector<ComponentRecord> enumerate_gamma_components(int n) {
  if (n < 1) throw DegenerateAlpha("enumerate_gamma_components: n must be >= 1");
  std::vector<ComponentRecord> out;
  for (const AlphaTuple& al : all_alpha_tuples(n)) out.push_back(make_record(al));
  return out;
}

std::vector<B3Component> enumerate_b3_components(int n) {
  if (n < 1) throw DegenerateAlpha("enumerate_b3_components: n must be >= 1");
  std::vector<B3Component> out;
  std::set<AlphaTuple> seen;
  for (const AlphaTuple& al : all_alpha_tuples(n)) {
    if (irreducible_density(al) != Density::Yes) continue;
    std::vector<AlphaTuple> orbit = mu6_orbit(al);
    std::sort(orbit.begin(), orbit.end());
    if (seen.contains(orbit.front())) continue;
    seen.insert(orbit.front());

    B3Component comp;
    const B3NormalForm nf = b3_normal_form(al);
    comp.normal_form = nf.alpha;
    comp.strict_normal_form = nf.strict_form;
    comp.orbit = orbit;
    for (const AlphaTuple& m : orbit) {
      if (m.y != m.z) continue;
      if (!comp.extension_witness || m < *comp.extension_witness) comp.extension_witness = m;
    }
    comp.record = make_record(nf.alpha);
    out.push_back(comp);
  }
  std::sort(out.begin(), out.end(),
            [](const B3Component& l, const B3Component& r) { return l.normal_form < r.normal_form; });
  return out;
}

}  // namespace lb3
