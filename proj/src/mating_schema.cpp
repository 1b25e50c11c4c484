#include "weldlab/mating_schema.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "weldlab/error.hpp"

namespace weldlab {

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

int wrap(int k, int m) { return ((k % m) + m) % m; }

}  // namespace

Slot Slot::group(int n, int p, PairingCase c, Placement pl) {
  Slot s;
  s.kind = SlotKind::Group;
  s.n = n;
  s.p = p;
  s.pairing = c;
  s.placement = pl;
  return s;
}

Slot Slot::blaschke(int d, Placement pl) {
  Slot s;
  s.kind = SlotKind::Blaschke;
  s.degree = d;
  s.placement = pl;
  return s;
}

int Slot::circle_degree() const { return kind == SlotKind::Group ? n * p - 1 : degree; }

std::string Slot::label() const {
  if (kind == SlotKind::Blaschke) return "B(" + std::to_string(degree) + ")";
  return std::string(pairing == PairingCase::CaseII ? "Gamma2" : "Gamma") + "_{" +
         std::to_string(n) + "," + std::to_string(p) + "}";
}

std::string BoundaryComplex::arc_label(int a) const {
  const Arc& arc = arcs[a];
  std::string out = "h" + std::to_string(arc.slot) + ".s" + std::to_string(arc.side);
  if (arc.half >= 0) out += arc.half == 0 ? "a" : "b";
  return out;
}

HoleBoundary build_hole(const Slot& slot, int slot_index) {
  if (slot.kind == SlotKind::Blaschke) {
    throw Error(ErrorCode::BlaschkeHasNoHole, "slot " + std::to_string(slot_index) + " is " + slot.label());
  }
  const int n = slot.n;
  const int p = slot.p;
  if (n < 1 || p < 1 || n * p < 2) {
    throw Error(ErrorCode::DegenerateInput, "slot " + std::to_string(slot_index) + " needs np >= 2");
  }
  if (slot.pairing == PairingCase::CaseII && p % 2 != 0) {
    throw Error(ErrorCode::InvalidCase, "slot " + std::to_string(slot_index) + ": Case II needs even p");
  }
  if (slot.pairing == PairingCase::CaseII && n == 1 && p == 2) {
    throw Error(ErrorCode::DegenerateInput, "slot " + std::to_string(slot_index) + ": Case II needs np > 2");
  }
  HoleBoundary h;
  h.slot = slot_index;
  h.p = p;
  h.pairing = slot.pairing;
  for (int s = 1; s <= p; ++s) {
    const int partner = slot.pairing == PairingCase::CaseI ? p + 1 - s : wrap(p + 2 - s - 1, p) + 1;
    h.sigma.push_back(partner);
    if (partner == s) h.interior_fixed_sides.push_back(s);
  }
  for (int k = 0; k < p; ++k) {
    const int image = slot.pairing == PairingCase::CaseI ? wrap(-k, p) : wrap(1 - k, p);
    h.corner_image.push_back(image);
    if (image == k) h.fixed_corners.push_back(k);
  }
  return h;
}

void validate_contact(const std::vector<Slot>& slots, const ContactData& contact) {
  std::set<CornerRef> seen;
  for (const auto& cls : contact.classes) {
    if (cls.empty()) throw Error(ErrorCode::SchemaError, "empty identification class");
    for (const CornerRef& c : cls) {
      if (c.slot < 0 || c.slot >= static_cast<int>(slots.size())) {
        throw Error(ErrorCode::SchemaError, "corner refers to missing slot " + std::to_string(c.slot));
      }
      const Slot& s = slots[c.slot];
      if (s.kind == SlotKind::Blaschke) {
        throw Error(ErrorCode::BlaschkeHasNoHole, "slot " + std::to_string(c.slot) + " has no corners");
      }
      if (c.corner < 0 || c.corner >= s.p) {
        throw Error(ErrorCode::SchemaError, "slot " + std::to_string(c.slot) + " has no corner " +
                                                std::to_string(c.corner));
      }
      if (!seen.insert(c).second) {
        throw Error(ErrorCode::SchemaError, "corner " + std::to_string(c.slot) + ":" +
                                                std::to_string(c.corner) + " listed twice");
      }
    }
  }
  for (const auto& [a, b] : contact.enclosures) {
    for (const SideRef& r : {a, b}) {
      if (r.slot < 0 || r.slot >= static_cast<int>(slots.size()) ||
          slots[r.slot].kind != SlotKind::Group || r.side < 1 || r.side > slots[r.slot].p) {
        throw Error(ErrorCode::SchemaError, "enclosure refers to a missing side");
      }
    }
  }
}

BoundaryComplex assemble(const std::vector<Slot>& slots, const ContactData& contact) {
  validate_contact(slots, contact);
  BoundaryComplex bc;
  bc.slots = slots;
  bc.hole_of_slot.assign(slots.size(), -1);
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].kind == SlotKind::Group) {
      bc.hole_of_slot[i] = static_cast<int>(bc.holes.size());
      bc.holes.push_back(build_hole(slots[i], static_cast<int>(i)));
    }
  }
  if (bc.holes.empty()) throw Error(ErrorCode::SchemaError, "schema has no group slot");

  // Corner classes: explicit ones first, then singletons.
  std::map<CornerRef, int> class_of;
  std::map<CornerRef, int> position;
  for (std::size_t c = 0; c < contact.classes.size(); ++c) {
    bc.vertex_corners.push_back(contact.classes[c]);
    for (std::size_t i = 0; i < contact.classes[c].size(); ++i) {
      class_of[contact.classes[c][i]] = static_cast<int>(c);
      position[contact.classes[c][i]] = static_cast<int>(i);
    }
  }
  for (const HoleBoundary& h : bc.holes) {
    for (int k = 0; k < h.p; ++k) {
      const CornerRef ref{h.slot, k};
      if (!class_of.count(ref)) {
        class_of[ref] = static_cast<int>(bc.vertex_corners.size());
        position[ref] = 0;
        bc.vertex_corners.push_back({ref});
      }
    }
  }
  const int corner_classes = static_cast<int>(bc.vertex_corners.size());

  // S must carry classes onto classes.
  std::vector<int> class_image(corner_classes, -1);
  for (int c = 0; c < corner_classes; ++c) {
    for (const CornerRef& ref : bc.vertex_corners[c]) {
      const CornerRef image{ref.slot, bc.hole(ref.slot).corner_image[ref.corner]};
      const int target = class_of.at(image);
      if (class_image[c] >= 0 && class_image[c] != target) {
        throw Error(ErrorCode::InconsistentInvolution,
                    "corners " + std::to_string(bc.vertex_corners[c].front().slot) + ":" +
                        std::to_string(bc.vertex_corners[c].front().corner) + " and " +
                        std::to_string(ref.slot) + ":" + std::to_string(ref.corner) +
                        " are identified but their images are not");
      }
      class_image[c] = target;
    }
  }
  for (int c = 0; c < corner_classes; ++c) {
    if (class_image[class_image[c]] != c ||
        bc.vertex_corners[c].size() != bc.vertex_corners[class_image[c]].size()) {
      throw Error(ErrorCode::InconsistentInvolution, "identification classes are not S-symmetric");
    }
  }

  // Boundary walks over sides.
  std::map<SideRef, int> walk_of_side;
  std::vector<std::vector<SideRef>> walks;
  for (const HoleBoundary& h : bc.holes) {
    for (int s = 1; s <= h.p; ++s) {
      SideRef start{h.slot, s};
      if (walk_of_side.count(start)) continue;
      std::vector<SideRef> walk;
      SideRef cur = start;
      do {
        if (walk_of_side.count(cur)) {
          throw Error(ErrorCode::NonPlanar, "rotation system revisits a side");
        }
        walk_of_side[cur] = static_cast<int>(walks.size());
        walk.push_back(cur);
        const CornerRef corner{cur.slot, cur.side % bc.hole(cur.slot).p};
        const auto& cls = bc.vertex_corners[class_of.at(corner)];
        const CornerRef next = cls[(position.at(corner) + 1) % cls.size()];
        cur = SideRef{next.slot, next.corner + 1};
      } while (!(cur == start));
      walks.push_back(std::move(walk));
    }
  }
  bc.walks = static_cast<int>(walks.size());

  // Clusters of holes joined at shared points.
  UnionFind holes_uf(static_cast<int>(bc.holes.size()));
  for (const auto& cls : contact.classes) {
    for (const CornerRef& c : cls) holes_uf.unite(bc.hole_of_slot[c.slot], bc.hole_of_slot[cls.front().slot]);
  }
  std::map<int, int> cluster_id;
  for (std::size_t h = 0; h < bc.holes.size(); ++h) {
    const int root = holes_uf.find(static_cast<int>(h));
    if (!cluster_id.count(root)) cluster_id[root] = static_cast<int>(cluster_id.size());
  }
  bc.clusters = static_cast<int>(cluster_id.size());
  std::vector<int> v_count(bc.clusters, 0), e_count(bc.clusters, 0), h_count(bc.clusters, 0),
      w_count(bc.clusters, 0);
  auto cluster_of_slot = [&](int slot) { return cluster_id.at(holes_uf.find(bc.hole_of_slot[slot])); };
  for (int c = 0; c < corner_classes; ++c) ++v_count[cluster_of_slot(bc.vertex_corners[c].front().slot)];
  for (const HoleBoundary& h : bc.holes) {
    ++h_count[cluster_of_slot(h.slot)];
    e_count[cluster_of_slot(h.slot)] += h.p;
  }
  for (const auto& w : walks) ++w_count[cluster_of_slot(w.front().slot)];
  for (int c = 0; c < bc.clusters; ++c) {
    if (v_count[c] - e_count[c] + h_count[c] + w_count[c] != 2) {
      throw Error(ErrorCode::NonPlanar, "cluster " + std::to_string(c) + " has Euler characteristic " +
                                            std::to_string(v_count[c] - e_count[c] + h_count[c] + w_count[c]));
    }
  }

  // Group walks into faces of the domain.
  const int expected_faces = bc.walks - bc.clusters + 1;
  UnionFind walk_uf(bc.walks);
  if (bc.clusters > 1) {
    if (!contact.enclosures.empty()) {
      for (const auto& [a, b] : contact.enclosures) walk_uf.unite(walk_of_side.at(a), walk_of_side.at(b));
    } else if (bc.walks == bc.clusters) {
      for (int w = 1; w < bc.walks; ++w) walk_uf.unite(0, w);
    } else {
      throw Error(ErrorCode::AmbiguousNesting,
                  "several clusters with multiple boundary walks; add enclosures");
    }
  }
  std::map<int, int> face_id;
  for (int w = 0; w < bc.walks; ++w) {
    const int root = walk_uf.find(w);
    if (!face_id.count(root)) face_id[root] = static_cast<int>(face_id.size());
  }
  if (static_cast<int>(face_id.size()) != expected_faces) {
    throw Error(ErrorCode::AmbiguousNesting,
                "enclosures give " + std::to_string(face_id.size()) + " faces, expected " +
                    std::to_string(expected_faces));
  }
  bc.faces.resize(face_id.size());

  // Arcs, vertices, S.
  bc.vertex_count = corner_classes;
  bc.vertex_s_action = class_image;
  bc.vertex_inserted.assign(corner_classes, false);
  std::map<std::tuple<int, int, int>, int> arc_index;
  for (int w = 0; w < bc.walks; ++w) {
    std::vector<int> cycle;
    for (const SideRef& side : walks[w]) {
      const HoleBoundary& h = bc.hole(side.slot);
      const int start_v = class_of.at(CornerRef{side.slot, side.side - 1});
      const int end_v = class_of.at(CornerRef{side.slot, side.side % h.p});
      if (h.self_paired(side.side)) {
        const int mid = bc.vertex_count++;
        bc.vertex_s_action.push_back(mid);
        bc.vertex_inserted.push_back(true);
        bc.vertex_corners.push_back({});
        for (int half = 0; half < 2; ++half) {
          arc_index[{side.slot, side.side, half}] = bc.arc_count();
          bc.arcs.push_back({side.slot, side.side, half});
          bc.arc_start.push_back(half == 0 ? start_v : mid);
          bc.arc_end.push_back(half == 0 ? mid : end_v);
          cycle.push_back(bc.arc_count() - 1);
        }
      } else {
        arc_index[{side.slot, side.side, -1}] = bc.arc_count();
        bc.arcs.push_back({side.slot, side.side, -1});
        bc.arc_start.push_back(start_v);
        bc.arc_end.push_back(end_v);
        cycle.push_back(bc.arc_count() - 1);
      }
    }
    const int f = face_id.at(walk_uf.find(w));
    bc.faces[f].cycles.push_back(cycle);
  }
  const int arc_total = bc.arc_count();
  bc.s_action.assign(arc_total, -1);
  bc.next_arc.assign(arc_total, -1);
  bc.prev_arc.assign(arc_total, -1);
  bc.arc_face.assign(arc_total, -1);
  for (int a = 0; a < arc_total; ++a) {
    const Arc& arc = bc.arcs[a];
    if (arc.half >= 0) {
      bc.s_action[a] = arc_index.at({arc.slot, arc.side, 1 - arc.half});
    } else {
      bc.s_action[a] = arc_index.at({arc.slot, bc.hole(arc.slot).side_partner(arc.side), -1});
    }
  }
  for (int f = 0; f < bc.face_count(); ++f) {
    for (const auto& cycle : bc.faces[f].cycles) {
      for (std::size_t i = 0; i < cycle.size(); ++i) {
        bc.arc_face[cycle[i]] = f;
        bc.next_arc[cycle[i]] = cycle[(i + 1) % cycle.size()];
        bc.prev_arc[cycle[(i + 1) % cycle.size()]] = cycle[i];
      }
    }
  }
  // S reverses orientation and respects vertices.
  for (int a = 0; a < arc_total; ++a) {
    const int b = bc.s_action[a];
    if (bc.s_action[b] != a || bc.vertex_s_action[bc.arc_start[a]] != bc.arc_end[b] ||
        bc.vertex_s_action[bc.arc_end[a]] != bc.arc_start[b]) {
      throw Error(ErrorCode::InconsistentInvolution, "S is not an orientation-reversing involution at " +
                                                         bc.arc_label(a));
    }
  }
  return bc;
}

DegreeReport validate_degrees(const std::vector<Slot>& slots) {
  DegreeReport report;
  int bounded_sum = 0;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Slot& s = slots[i];
    if (s.placement == Placement::Unbounded) {
      if (report.unbounded_slot) {
        throw Error(ErrorCode::DegreeMismatch, "more than one unbounded slot");
      }
      report.unbounded_slot = static_cast<int>(i);
      continue;
    }
    if (s.circle_degree() < 2) {
      throw Error(ErrorCode::DegreeMismatch, "bounded slot " + std::to_string(i) + " has degree < 2");
    }
    bounded_sum += s.circle_degree() - 1;
  }
  report.polynomial_degree = bounded_sum + 1;
  if (report.unbounded_slot) {
    const Slot& u = slots[*report.unbounded_slot];
    if (u.circle_degree() != report.polynomial_degree) {
      throw Error(ErrorCode::DegreeMismatch,
                  "unbounded slot " + u.label() + " has degree " + std::to_string(u.circle_degree()) +
                      " but the bounded slots give deg P = " + std::to_string(report.polynomial_degree));
    }
  }
  report.correspondence_degree = report.polynomial_degree + 1;
  return report;
}

MatingSchema newton_schema(int n) {
  if (n < 3) throw Error(ErrorCode::PreconditionViolation, "Newton schema needs n >= 3");
  MatingSchema schema;
  schema.name = "newton-" + std::to_string(n);
  std::vector<CornerRef> cls;
  for (int i = 0; i < n; ++i) {
    schema.slots.push_back(Slot::group(3, 1, PairingCase::CaseI));
    cls.push_back({i, 0});
  }
  schema.contact.classes.push_back(cls);
  return schema;
}

}  // namespace weldlab
