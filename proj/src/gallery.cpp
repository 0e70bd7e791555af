#include "dorroh/gallery.hpp"

#include <map>
#include <stdexcept>

namespace dorroh {

namespace {

// H = k as a Hopf algebra, and the scalar (co)actions on a 1-dim I.
constexpr const char* kGroundHopf = R"(space H 1 [1]
mult H (0,0,0) = 1
unit H (0) = 1
comult H (0,0,0) = 1
counit H (0) = 1
antipode H (0,0) = 1
)";

constexpr const char* kScalarAct = R"(actL (0,0,0) = 1
actR (0,0,0) = 1
)";

constexpr const char* kScalarCoact = R"(coactL (0,0,0) = 1
coactR (0,0,0) = 1
)";

std::map<std::string, std::string> build() {
  std::map<std::string, std::string> g;
  std::string ground = kGroundHopf, act = kScalarAct, coact = kScalarCoact;

  g["dualnum"] = R"(# dual numbers k ⋉ km, m² = 0
field Q
space H 1 [1]
mult H (0,0,0) = 1
unit H (0) = 1
space I 1 [m]
mult I
pair H I
)" + act + R"(sub M = [(0,1)]
sub E = [(1,0)]
)";

  g["kc2"] = "# k ⋉ kx with x² = -2x and Δx = x⊗x; (α, βx) ↦ α + β(g-1) identifies it with kC2\nfield Q\n" +
             ground + R"(space I 1 [x]
mult I (0,0,0) = -2
comult I (0,0,0) = 1
pair H I
)" + act + coact + R"(sub X = [(0,1)]
sub G = [(1,1)]
)";

  g["kc2-broken-delta"] = "# as kc2 but with Δx = 0, which breaks the coproduct on I⊗I\nfield Q\n" + ground +
                          R"(space I 1 [x]
mult I (0,0,0) = -2
comult I
pair H I
)" + act + coact;

  g["sweedler"] = R"(# Sweedler's Hopf algebra, graded by deg x = 1, and its split over span{1,g}
field Q
space A 4 [1,g,x,gx]
mult A (0,0,0) = 1
mult A (0,1,1) = 1
mult A (0,2,2) = 1
mult A (0,3,3) = 1
mult A (1,0,1) = 1
mult A (1,1,0) = 1
mult A (1,2,3) = 1
mult A (1,3,2) = 1
mult A (2,0,2) = 1
mult A (2,1,3) = -1
mult A (3,0,3) = 1
mult A (3,1,2) = -1
unit A (0) = 1
comult A (0,0,0) = 1
comult A (1,1,1) = 1
comult A (2,1,2) = 1
comult A (2,2,0) = 1
comult A (3,0,3) = 1
comult A (3,3,1) = 1
counit A (0) = 1
counit A (1) = 1
antipode A (0,0) = 1
antipode A (1,1) = 1
antipode A (2,3) = -1
antipode A (3,2) = 1
deg A [0,0,1,1]
space H 2 [1,g]
mult H (0,0,0) = 1
mult H (0,1,1) = 1
mult H (1,0,1) = 1
mult H (1,1,0) = 1
unit H (0) = 1
comult H (0,0,0) = 1
comult H (1,1,1) = 1
counit H (0) = 1
counit H (1) = 1
antipode H (0,0) = 1
antipode H (1,1) = 1
space I 2 [x,gx]
mult I
comult I
pair H I
# g·x = gx, x·g = -gx
actL (0,0,0) = 1
actL (0,1,1) = 1
actL (1,0,1) = 1
actL (1,1,0) = 1
actR (0,0,0) = 1
actR (0,1,1) = -1
actR (1,0,1) = 1
actR (1,1,0) = -1
# Δx = x⊗1 + g⊗x, Δ(gx) = gx⊗g + 1⊗gx
coactL (0,1,0) = 1
coactL (1,0,1) = 1
coactR (0,0,0) = 1
coactR (1,1,1) = 1
sub X = [(0,0,1,0),(0,0,0,1)]
)";

  g["ex42"] = R"(# k ⋉ (k × U) with U = ku, u² = 0, and the ideal {(α,-α,u)}
field Q
space H 1 [1]
mult H (0,0,0) = 1
unit H (0) = 1
space I 2 [e,u]
mult I (0,0,0) = 1
pair H I
actL (0,0,0) = 1
actL (0,1,1) = 1
actR (0,0,0) = 1
actR (1,0,1) = 1
sub K = [(1,-1,0),(0,0,1)]
)";

  g["trivext-zt-fail"] = "# k ⋉ km with scalar actions and coactions: 2·m⊗m survives\nfield Q\n" + ground +
                         "space M 1 [m]\nmult M\ncomult M\npair H M\n" + act + coact;
  g["trivext-zt-pass"] = "# the same data in characteristic 2, where 2·m⊗m = 0\nfield GF 2\n" + ground +
                         "space M 1 [m]\nmult M\ncomult M\npair H M\n" + act + coact + "sub M = [(0,1)]\n";

  g["trivext-kxk"] = R"(# k×k acting on M = k through the first coordinate
field GF 2
space A 2 [e1,e2]
mult A (0,0,0) = 1
mult A (1,1,1) = 1
unit A (0) = 1
unit A (1) = 1
space M 1 [m]
mult M
pair A M
actL (0,0,0) = 1
actR (0,0,0) = 1
)";

  g["trivext-twisted"] = R"(# the coalgebra kC2 with M = km, ρ_l(m) = g⊗m, ρ_r(m) = m⊗g
field GF 2
space C 2 [1,g]
comult C (0,0,0) = 1
comult C (1,1,1) = 1
counit C (0) = 1
counit C (1) = 1
space M 1 [m]
comult M
pair C M
coactL (0,1,0) = 1
coactR (0,0,1) = 1
)";

  std::string counit_h = "space H 1 [1]\ncomult H (0,0,0) = 1\ncounit H (0) = 1\n";
  g["counit-grouplike"] = "# counitization of P = kx with Δx = x⊗x; (1,x) is group-like\nfield Q\n" + counit_h +
                          "space P 1 [x]\ncomult P (0,0,0) = 1\npair H P\n" + coact + "sub T = [(1,1)]\n";

  std::string unit_h = "space H 1 [1]\nmult H (0,0,0) = 1\nunit H (0) = 1\n";
  g["gf2-enum-zero"] = "# unitization of I = kx, x² = 0\nfield GF 2\n" + unit_h + "space I 1 [x]\nmult I\npair H I\n" + act;
  g["gf2-enum-idem"] =
      "# unitization of I = kx, x² = x\nfield GF 2\n" + unit_h + "space I 1 [x]\nmult I (0,0,0) = 1\npair H I\n" + act;
  g["gf2-enum-grouplike"] = "# counitization of P = kx, Δx = x⊗x\nfield GF 2\n" + counit_h +
                            "space P 1 [x]\ncomult P (0,0,0) = 1\npair H P\n" + coact;
  g["gf2-enum-zero-coalg"] =
      "# counitization of P = kx, Δx = 0\nfield GF 2\n" + counit_h + "space P 1 [x]\ncomult P\npair H P\n" + coact;
  return g;
}

const std::map<std::string, std::string>& table() {
  static const std::map<std::string, std::string> g = build();
  return g;
}

}  // namespace

std::vector<std::string> gallery_names() {
  std::vector<std::string> out;
  for (const auto& [k, v] : table()) out.push_back(k);
  return out;
}

const std::string& gallery_text(const std::string& name) {
  auto it = table().find(name);
  if (it == table().end()) throw std::invalid_argument("no gallery fixture named '" + name + "'");
  return it->second;
}

StructureDocument gallery(const std::string& name, std::optional<FieldSpec> field) {
  StructureDocument doc = parse_document(gallery_text(name));
  if (!field || *field == doc.field) return doc;
  if ((name == "kc2" || name == "sweedler") && field->characteristic() == 2)
    throw std::invalid_argument(name + " needs a field of characteristic other than 2");
  return reinterpret(doc, *field);
}

}  // namespace dorroh
