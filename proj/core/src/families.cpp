#include "celltrees/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "celltrees/errors.hpp"

namespace celltrees {

namespace {

// Faces handed to make_simplicial_cells are lists of indices into `vertex_ids`
// (the global vertex order that fixes the orientation signs), sorted ascending.
std::vector<Cell> make_simplicial_cells(const std::vector<std::string>& vertex_ids,
                                        const std::vector<Monomial>& vertex_monomials,
                                        const std::vector<std::vector<int>>& faces) {
  const auto face_id = [&](const std::vector<int>& face) {
    std::string id;
    for (std::size_t i = 0; i < face.size(); ++i) {
      if (i > 0) id += '|';
      id += vertex_ids[static_cast<std::size_t>(face[i])];
    }
    return id;
  };

  std::vector<Cell> cells;
  cells.reserve(faces.size());
  for (const auto& face : faces) {
    Cell c;
    c.id = face_id(face);
    c.dim = static_cast<int>(face.size()) - 1;
    for (int v : face)
      for (const auto& [var, exp] : vertex_monomials[static_cast<std::size_t>(v)])
        c.weight[var] += exp;
    if (c.dim >= 1) {
      for (std::size_t p = 0; p < face.size(); ++p) {
        std::vector<int> facet = face;
        facet.erase(facet.begin() + static_cast<long>(p));
        c.boundary.emplace_back(face_id(facet), Int(p % 2 == 0 ? 1 : -1));
      }
    }
    cells.push_back(std::move(c));
  }
  return cells;
}

}  // namespace

CellComplex simplex_skeleton(int n, int d) {
  if (n < 1 || d < -1 || d > n - 1)
    throw argument_error("simplex skeleton needs n >= 1 and -1 <= d <= n-1");
  std::vector<std::string> vertex_ids;
  std::vector<Monomial> monos;
  for (int i = 1; i <= n; ++i) {
    vertex_ids.push_back("v" + std::to_string(i));
    monos.push_back({{"v[" + std::to_string(i) + "]", 1}});
  }
  std::vector<std::vector<int>> faces;
  // All subsets of size 1..d+1, built by lexicographic recursion.
  std::vector<int> cur;
  auto rec = [&](auto&& self, int start) -> void {
    if (!cur.empty()) faces.push_back(cur);
    if (static_cast<int>(cur.size()) == d + 1) return;
    for (int v = start; v < n; ++v) {
      cur.push_back(v);
      self(self, v + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return CellComplex(make_simplicial_cells(vertex_ids, monos, faces),
                     "simplex-" + std::to_string(n) + "-" + std::to_string(d),
                     {{"family", "simplex"},
                      {"n", std::to_string(n)},
                      {"d", std::to_string(d)}});
}

CellComplex edgeless_complex(int q, int n_q) {
  if (q < 1 || n_q < 1) throw argument_error("edgeless complex needs q >= 1, n >= 1");
  std::vector<Cell> cells;
  for (int i = 1; i <= n_q; ++i) {
    Cell c;
    c.id = "v" + std::to_string(q) + "." + std::to_string(i);
    c.dim = 0;
    c.weight = {{"X[" + std::to_string(q) + "." + std::to_string(i) + "]", 1}};
    cells.push_back(std::move(c));
  }
  return CellComplex(std::move(cells), "edgeless-" + std::to_string(q) + "-" + std::to_string(n_q));
}

CellComplex complete_colorful(const ColorfulSpec& spec) {
  const int r = static_cast<int>(spec.sizes.size());
  if (r < 1) throw argument_error("colorful complex needs at least one color");
  for (int nq : spec.sizes)
    if (nq < 1) throw argument_error("color class sizes must be positive");
  if (spec.skeleton != -2 && (spec.skeleton < -1 || spec.skeleton > r - 1))
    throw argument_error("colorful skeleton dimension out of range");
  const int top = spec.skeleton == -2 ? r - 1 : spec.skeleton;

  // Global vertex order: color-major, then index within the color class.
  std::vector<std::string> vertex_ids;
  std::vector<Monomial> monos;
  std::vector<std::pair<int, int>> color_range;  // per color: [first, last) vertex index
  for (int q = 1; q <= r; ++q) {
    int first = static_cast<int>(vertex_ids.size());
    for (int i = 1; i <= spec.sizes[static_cast<std::size_t>(q - 1)]; ++i) {
      vertex_ids.push_back("v" + std::to_string(q) + "." + std::to_string(i));
      monos.push_back({{"X[" + std::to_string(q) + "." + std::to_string(i) + "]", 1}});
    }
    color_range.emplace_back(first, static_cast<int>(vertex_ids.size()));
  }

  // Faces: at most one vertex per color, dimension <= top.
  std::vector<std::vector<int>> faces;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int color) -> void {
    if (!cur.empty()) faces.push_back(cur);
    if (static_cast<int>(cur.size()) == top + 1) return;
    for (int q = color; q < r; ++q)
      for (int v = color_range[static_cast<std::size_t>(q)].first;
           v < color_range[static_cast<std::size_t>(q)].second; ++v) {
        cur.push_back(v);
        self(self, q + 1);
        cur.pop_back();
      }
  };
  rec(rec, 0);

  std::string sizes_str;
  for (int q = 0; q < r; ++q) {
    if (q > 0) sizes_str += ",";
    sizes_str += std::to_string(spec.sizes[static_cast<std::size_t>(q)]);
  }
  return CellComplex(make_simplicial_cells(vertex_ids, monos, faces), "colorful-" + sizes_str,
                     {{"family", "colorful"}, {"sizes", sizes_str}});
}

namespace {

// Vertex supports of every cell of a simplicial complex, or argument_error
// if the complex is not simplicial (some k-cell without exactly k+1 vertices
// and the standard +-1 facet boundary).
std::map<std::string, std::vector<std::string>> simplicial_supports(const CellComplex& cx) {
  std::map<std::string, std::vector<std::string>> support;
  std::set<std::vector<std::string>> seen;
  for (int k = 0; k <= cx.dim(); ++k) {
    for (const Cell& c : cx.cells(k)) {
      std::set<std::string> verts;
      if (k == 0) {
        verts.insert(c.id);
      } else {
        if (c.boundary.size() != static_cast<std::size_t>(k + 1))
          throw argument_error("cell '" + c.id + "' is not simplicial (facet count)");
        for (const auto& [target, coeff] : c.boundary) {
          if (coeff != 1 && coeff != -1)
            throw argument_error("cell '" + c.id + "' is not simplicial (coefficients)");
          for (const std::string& v : support.at(target)) verts.insert(v);
        }
      }
      if (verts.size() != static_cast<std::size_t>(k + 1))
        throw argument_error("cell '" + c.id + "' is not simplicial (vertex count)");
      std::vector<std::string> vs(verts.begin(), verts.end());
      if (!seen.insert(vs).second)
        throw argument_error("two cells share the vertex set of '" + c.id + "'");
      support.emplace(c.id, std::move(vs));
    }
  }
  return support;
}

}  // namespace

CellComplex join(const CellComplex& lhs, const CellComplex& rhs) {
  auto lsup = simplicial_supports(lhs);
  auto rsup = simplicial_supports(rhs);

  {
    std::vector<std::string> lv = lhs.variables(), rv = rhs.variables();
    std::vector<std::string> clash;
    std::set_intersection(lv.begin(), lv.end(), rv.begin(), rv.end(), std::back_inserter(clash));
    if (!clash.empty())
      throw argument_error("join operands share the weight variable '" + clash.front() + "'");
    for (const Cell& v : rhs.cells(0))
      if (lhs.has_cell(v.id)) throw argument_error("join operands share the vertex id '" + v.id + "'");
  }

  // Combined vertex order: lhs vertices (id order) before rhs vertices.
  std::vector<std::string> vertex_ids;
  std::vector<Monomial> monos;
  std::map<std::string, int> vindex;
  for (const CellComplex* part : {&lhs, &rhs})
    for (const Cell& v : part->cells(0)) {
      vindex[v.id] = static_cast<int>(vertex_ids.size());
      vertex_ids.push_back(v.id);
      monos.push_back(v.weight);
    }

  const auto face_key = [&](const std::vector<std::string>& ids) {
    std::vector<int> key;
    for (const auto& id : ids) key.push_back(vindex.at(id));
    std::sort(key.begin(), key.end());
    return key;
  };

  // sigma_1 union sigma_2 over all face pairs, either side possibly empty.
  std::vector<std::vector<int>> faces;
  std::vector<Monomial> face_weights;
  std::vector<std::pair<std::vector<int>, Monomial>> left_faces{{std::vector<int>{}, Monomial{}}};
  for (int k = 0; k <= lhs.dim(); ++k)
    for (const Cell& c : lhs.cells(k)) left_faces.emplace_back(face_key(lsup.at(c.id)), c.weight);
  std::vector<std::pair<std::vector<int>, Monomial>> right_faces{{std::vector<int>{}, Monomial{}}};
  for (int k = 0; k <= rhs.dim(); ++k)
    for (const Cell& c : rhs.cells(k)) right_faces.emplace_back(face_key(rsup.at(c.id)), c.weight);

  for (const auto& [lf, lw] : left_faces)
    for (const auto& [rf, rw] : right_faces) {
      if (lf.empty() && rf.empty()) continue;
      std::vector<int> face = lf;
      face.insert(face.end(), rf.begin(), rf.end());  // already sorted: rhs above lhs
      Monomial w = lw;
      for (const auto& [var, exp] : rw) w[var] += exp;
      faces.push_back(std::move(face));
      face_weights.push_back(std::move(w));
    }

  std::vector<Cell> cells = make_simplicial_cells(vertex_ids, monos, faces);
  // make_simplicial_cells multiplies vertex monomials; the join contract is
  // the product of the two face monomials instead, so overwrite.
  for (std::size_t i = 0; i < cells.size(); ++i) cells[i].weight = face_weights[i];
  return CellComplex(std::move(cells), lhs.name() + "*" + rhs.name());
}

CellComplex hypercube(const CubeSpec& spec) {
  if (spec.n < 0) throw argument_error("hypercube dimension must be nonnegative");
  const int n = spec.n;
  std::vector<Cell> cells;
  std::vector<std::string> words{""};
  for (int i = 0; i < n; ++i) {
    std::vector<std::string> next;
    for (const auto& w : words)
      for (char ch : {'0', '1', 'I'}) next.push_back(w + ch);
    words = std::move(next);
  }
  for (const std::string& w : words) {
    Cell c;
    c.id = w;
    c.dim = static_cast<int>(std::count(w.begin(), w.end(), 'I'));
    for (int i = 0; i < n; ++i) {
      std::string coord = "[" + std::to_string(i + 1) + "]";
      if (w[static_cast<std::size_t>(i)] == 'I') c.weight["q" + coord] = 1;
      else if (w[static_cast<std::size_t>(i)] == '0') c.weight["y" + coord] = 1;
      else c.weight["z" + coord] = 1;
    }
    int seen_interval = 0;
    for (int i = 0; i < n; ++i) {
      if (w[static_cast<std::size_t>(i)] != 'I') continue;
      Int sign = (seen_interval % 2 == 0) ? 1 : -1;
      ++seen_interval;
      std::string w1 = w, w0 = w;
      w1[static_cast<std::size_t>(i)] = '1';
      w0[static_cast<std::size_t>(i)] = '0';
      c.boundary.emplace_back(w1, sign);
      c.boundary.emplace_back(w0, -sign);
    }
    cells.push_back(std::move(c));
  }
  return CellComplex(std::move(cells), "cube-" + std::to_string(n),
                     {{"family", "cube"}, {"n", std::to_string(n)}});
}

}  // namespace celltrees
