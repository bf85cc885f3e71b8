#include "quasitree/knot_diagram.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "quasitree/error.hpp"

namespace quasitree {
namespace {

int succ(int label, int arcs) { return label % arcs + 1; }

int index_of(Slot s) { return 4 * s.crossing + s.position; }

}  // namespace

KnotDiagram::KnotDiagram(std::vector<CrossingCode> crossings, std::string name)
    : crossings_(std::move(crossings)), name_(std::move(name)) {
  const int c = static_cast<int>(crossings_.size());
  const int m = 2 * c;
  if (c == 0) throw MalformedCode("PD code has no crossings");

  std::vector<std::vector<Slot>> ends(m + 1);
  for (int x = 0; x < c; ++x) {
    for (int p = 0; p < 4; ++p) {
      const int l = crossings_[x][p];
      if (l < 1 || l > m)
        throw MalformedCode("arc label " + std::to_string(l) + " outside 1.." + std::to_string(m));
      ends[l].push_back({x, p});
    }
  }
  for (int l = 1; l <= m; ++l) {
    if (ends[l].size() != 2)
      throw MalformedCode("arc label " + std::to_string(l) + " appears " +
                          std::to_string(ends[l].size()) + " times, expected 2");
  }
  mate_.resize(4 * c);
  for (int l = 1; l <= m; ++l) {
    mate_[index_of(ends[l][0])] = ends[l][1];
    mate_[index_of(ends[l][1])] = ends[l][0];
  }

  // Strands run straight through crossings; more than one closed strand is a link.
  std::vector<char> seen(4 * c, 0);
  int strands = 0;
  for (int i = 0; i < 4 * c; ++i) {
    if (seen[i]) continue;
    ++strands;
    Slot s{i / 4, i % 4};
    while (!seen[index_of(s)]) {
      seen[index_of(s)] = 1;
      const Slot across{s.crossing, (s.position + 2) % 4};
      seen[index_of(across)] = 1;
      s = mate_[index_of(across)];
    }
  }
  if (strands != 1)
    throw UnsupportedLink("PD code describes a " + std::to_string(strands) +
                          "-component link; only knots are supported");

  std::fill(seen.begin(), seen.end(), 0);
  int face_count = 0;
  for (int i = 0; i < 4 * c; ++i) {
    if (seen[i]) continue;
    ++face_count;
    for (Slot k{i / 4, i % 4}; !seen[index_of(k)];
         k = mate_[index_of({k.crossing, (k.position + 1) % 4})])
      seen[index_of(k)] = 1;
  }
  if (face_count != c + 2)
    throw MalformedCode("PD code is not planar: " + std::to_string(face_count) + " faces for " +
                        std::to_string(c) + " crossings");

  incoming_.assign(4 * c, 0);
  for (int x = 0; x < c; ++x) {
    const auto& [a, b, cc, d] = crossings_[x];
    if (cc != succ(a, m))
      throw MalformedCode("crossing " + std::to_string(x + 1) +
                          ": understrand labels must increase along the knot");
    incoming_[4 * x] = 1;
    int over_in = -1;
    if (m == 2)
      over_in = (b != a) ? 1 : 3;
    else if (d == succ(b, m))
      over_in = 1;
    else if (b == succ(d, m))
      over_in = 3;
    else
      throw MalformedCode("crossing " + std::to_string(x + 1) +
                          ": overstrand labels are not consecutive");
    incoming_[4 * x + over_in] = 1;
  }
  for (int l = 1; l <= m; ++l) {
    if (incoming_[index_of(ends[l][0])] == incoming_[index_of(ends[l][1])])
      throw MalformedCode("arc " + std::to_string(l) + " is not consistently oriented");
  }
}

int KnotDiagram::sign(int x) const { return incoming({x, 3}) ? 1 : -1; }

int KnotDiagram::writhe() const {
  int w = 0;
  for (int x = 0; x < static_cast<int>(crossing_count()); ++x) w += sign(x);
  return w;
}

namespace {

class PdScanner {
 public:
  explicit PdScanner(std::string_view text) : text_(text) {}

  std::vector<CrossingCode> parse() {
    skip_space();
    bool wrapped = false;
    if (peek() == 'P') {
      expect_word("PD");
      skip_space();
      expect('[');
      wrapped = true;
    }
    std::vector<CrossingCode> out;
    while (true) {
      skip_separators();
      if (at_end() || (wrapped && peek() == ']')) break;
      out.push_back(crossing());
    }
    if (wrapped) {
      expect(']');
      skip_space();
    }
    if (!at_end()) throw SyntaxError("unexpected character '" + std::string(1, peek()) + "'", pos_);
    if (out.empty()) throw SyntaxError("no crossings found", pos_);
    return out;
  }

 private:
  CrossingCode crossing() {
    if (peek() != 'X') throw SyntaxError("expected 'X'", pos_);
    ++pos_;
    skip_space();
    const char open = peek();
    if (open != '(' && open != '[') throw SyntaxError("expected '(' or '['", pos_);
    ++pos_;
    CrossingCode code{};
    for (int i = 0; i < 4; ++i) {
      skip_space();
      if (i > 0) {
        expect(',');
        skip_space();
      }
      code[i] = integer();
    }
    skip_space();
    expect(open == '(' ? ')' : ']');
    return code;
  }

  int integer() {
    const std::size_t start = pos_;
    long value = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      value = value * 10 + (peek() - '0');
      if (value > 1'000'000) throw SyntaxError("arc label too large", start);
      ++pos_;
    }
    if (pos_ == start) throw SyntaxError("expected arc label", pos_);
    return static_cast<int>(value);
  }

  void expect(char ch) {
    if (peek() != ch) throw SyntaxError(std::string("expected '") + ch + "'", pos_);
    ++pos_;
  }

  void expect_word(std::string_view w) {
    if (text_.substr(pos_, w.size()) != w) throw SyntaxError("expected '" + std::string(w) + "'", pos_);
    pos_ += w.size();
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  void skip_separators() {
    while (!at_end() && (std::isspace(static_cast<unsigned char>(peek())) || peek() == ',')) ++pos_;
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

KnotDiagram parse_pd(std::string_view text) { return KnotDiagram(PdScanner(text).parse()); }

std::string to_pd(const KnotDiagram& diagram) {
  std::ostringstream out;
  bool first = true;
  for (const auto& [a, b, c, d] : diagram.crossings()) {
    if (!first) out << ' ';
    first = false;
    out << "X(" << a << ',' << b << ',' << c << ',' << d << ')';
  }
  return out.str();
}

PdDocument parse_pd_document(std::string_view text) {
  std::string code, name;
  std::optional<int> face;
  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    const std::string t = trim(line);
    if (t.empty()) continue;
    if (t.front() != '#') {
      code += t;
      code += '\n';
      continue;
    }
    const std::string body = trim(std::string_view(t).substr(1));
    const auto colon = body.find(':');
    if (colon == std::string::npos) continue;
    const std::string key = trim(std::string_view(body).substr(0, colon));
    const std::string value = trim(std::string_view(body).substr(colon + 1));
    if (key == "name") {
      name = value;
    } else if (key == "r3-face") {
      try {
        face = std::stoi(value);
      } catch (const std::exception&) {
        throw InputError("bad r3-face value '" + value + "'");
      }
    }
  }
  PdDocument doc{parse_pd(code), face};
  doc.diagram.set_name(name);
  return doc;
}

PdDocument read_pd_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  auto doc = parse_pd_document(buf.str());
  if (doc.diagram.name().empty()) doc.diagram.set_name(path.stem().string());
  return doc;
}

std::vector<Face> faces(const KnotDiagram& diagram) {
  const int c = static_cast<int>(diagram.crossing_count());
  std::vector<char> seen(4 * c, 0);
  std::vector<Face> out;
  for (int i = 0; i < 4 * c; ++i) {
    if (seen[i]) continue;
    Face f{static_cast<int>(out.size()), {}};
    Corner k{i / 4, i % 4};
    while (!seen[index_of(k)]) {
      seen[index_of(k)] = 1;
      f.boundary.push_back(k);
      k = diagram.mate({k.crossing, (k.position + 1) % 4});
    }
    out.push_back(std::move(f));
  }
  return out;
}

namespace {

// Slot-level description of a diagram, used to rebuild a PD code after a
// local rewrite.
struct SlotGraph {
  std::vector<Slot> mate;
  std::vector<int> under_pos;  // 0 when the understrand uses positions 0/2, else 1
};

KnotDiagram relabel(const SlotGraph& g, Slot start, std::string name) {
  const int c = static_cast<int>(g.under_pos.size());
  const int m = 2 * c;
  std::vector<int> label(4 * c, 0);
  std::vector<char> in(4 * c, 0);
  Slot cur = start;
  int next_label = 1;
  do {
    const Slot head = g.mate[index_of(cur)];
    label[index_of(cur)] = label[index_of(head)] = next_label++;
    in[index_of(head)] = 1;
    cur = {head.crossing, (head.position + 2) % 4};
  } while (!(cur == start) && next_label <= m + 1);
  if (next_label != m + 1) throw MalformedCode("rewritten diagram is not a single strand");

  std::vector<CrossingCode> codes(c);
  for (int x = 0; x < c; ++x) {
    int u = g.under_pos[x];
    if (!in[4 * x + u]) u += 2;
    for (int q = 0; q < 4; ++q) codes[x][q] = label[4 * x + (u + q) % 4];
  }
  return KnotDiagram(std::move(codes), std::move(name));
}

}  // namespace

KnotDiagram reidemeister_3(const KnotDiagram& diagram, int face_id) {
  const auto fs = faces(diagram);
  if (face_id < 0 || face_id >= static_cast<int>(fs.size()))
    throw NotApplicable("face " + std::to_string(face_id) + " does not exist");
  const auto& bd = fs[face_id].boundary;
  if (bd.size() != 3)
    throw NotApplicable("face " + std::to_string(face_id) + " has " + std::to_string(bd.size()) +
                        " corners, not a triangle");
  const int X = bd[0].crossing, Y = bd[1].crossing, Z = bd[2].crossing;
  if (X == Y || Y == Z || Z == X) throw NotApplicable("triangle repeats a crossing");
  const int i = bd[0].position, j = bd[1].position, k = bd[2].position;
  auto arm = [](int x, int p) { return Slot{x, p % 4}; };

  // External arms in counterclockwise order around the triangle.
  const std::array<Slot, 6> hexagon{arm(X, i + 2), arm(X, i + 3), arm(Z, k + 2),
                                    arm(Z, k + 3), arm(Y, j + 2), arm(Y, j + 3)};
  enum Strand { kXY, kYZ, kZX };
  constexpr std::array<Strand, 6> strand_at{kZX, kXY, kYZ, kZX, kXY, kYZ};

  // Over strand at each old crossing, keyed by the unordered strand pair.
  std::array<std::array<int, 3>, 3> over{};
  auto set_over = [&](Strand a, Strand b, Strand o) { over[a][b] = over[b][a] = o; };
  set_over(kXY, kZX, KnotDiagram::is_under(hexagon[1].position) ? kZX : kXY);  // at X
  set_over(kXY, kYZ, KnotDiagram::is_under(hexagon[4].position) ? kYZ : kXY);  // at Y
  set_over(kYZ, kZX, KnotDiagram::is_under(hexagon[3].position) ? kYZ : kZX);  // at Z
  std::array<int, 3> wins{};
  ++wins[over[kXY][kZX]];
  ++wins[over[kXY][kYZ]];
  ++wins[over[kYZ][kZX]];
  if (std::find(wins.begin(), wins.end(), 2) == wins.end())
    throw NotApplicable("triangle strands alternate; Reidemeister III does not apply");

  const int c = static_cast<int>(diagram.crossing_count());
  SlotGraph g;
  g.mate.resize(4 * c);
  g.under_pos.assign(c, 0);
  for (int x = 0; x < c; ++x)
    for (int p = 0; p < 4; ++p) g.mate[4 * x + p] = diagram.mate({x, p});

  // After the move the crossing with external arms at hexagon (h, h+1) is
  // Y for h = 1, X for h = 3 and Z for h = 5.
  auto new_crossing = [&](int h) {
    const int first = (h % 2 == 1) ? h : (h + 5) % 6;
    return first == 1 ? Y : first == 3 ? X : Z;
  };
  auto new_slot = [&](int h) { return Slot{new_crossing(h), h % 2 == 1 ? 2 : 3}; };
  std::array<Slot, 6> outside{};
  for (int h = 0; h < 6; ++h) outside[h] = diagram.mate(hexagon[h]);

  for (int h : {1, 3, 5}) {
    const int x = new_crossing(h);
    g.mate[4 * x + 0] = {new_crossing((h + 2) % 6), 1};
    g.mate[4 * x + 1] = {new_crossing((h + 4) % 6), 0};
    for (int q : {h, (h + 1) % 6}) {
      const Slot mine = new_slot(q);
      const auto it = std::find(hexagon.begin(), hexagon.end(), outside[q]);
      const Slot other = it != hexagon.end() ? new_slot(static_cast<int>(it - hexagon.begin()))
                                             : outside[q];
      g.mate[index_of(mine)] = other;
      g.mate[index_of(other)] = mine;
    }
    const Strand s_main = strand_at[h];
    const Strand s_other = strand_at[(h + 1) % 6];
    g.under_pos[x] = over[s_main][s_other] == s_main ? 1 : 0;
  }

  // Start relabelling on an arc that leaves a crossing outside the triangle,
  // otherwise on an external arm leaving the triangle; both keep orientation.
  std::optional<Slot> start;
  for (int l = 1; l <= static_cast<int>(diagram.arc_count()) && !start; ++l) {
    for (int x = 0; x < c && !start; ++x) {
      if (x == X || x == Y || x == Z) continue;
      for (int p = 0; p < 4; ++p) {
        const Slot s{x, p};
        if (diagram.label(s) == l && !diagram.incoming(s)) {
          start = s;
          break;
        }
      }
    }
  }
  if (!start) {
    for (int h = 0; h < 6; ++h) {
      if (!diagram.incoming(hexagon[h])) {
        start = new_slot(h);
        break;
      }
    }
  }
  return relabel(g, *start, diagram.name());
}

KnotDiagram mirror(const KnotDiagram& diagram) {
  std::vector<CrossingCode> out;
  out.reserve(diagram.crossing_count());
  for (const auto& [a, b, c, d] : diagram.crossings()) out.push_back({a, d, c, b});
  return KnotDiagram(std::move(out), diagram.name());
}

KnotDiagram crossing_change(const KnotDiagram& diagram, int x) {
  auto codes = diagram.crossings();
  const auto [a, b, c, d] = codes.at(x);
  codes[x] = diagram.incoming({x, 1}) ? CrossingCode{b, c, d, a} : CrossingCode{d, a, b, c};
  return KnotDiagram(std::move(codes), diagram.name());
}

namespace {

std::vector<CrossingCode> canonical_form(const KnotDiagram& d) {
  const int m = static_cast<int>(d.arc_count());
  std::vector<CrossingCode> best;
  for (int shift = 0; shift < m; ++shift) {
    std::vector<CrossingCode> codes = d.crossings();
    for (auto& code : codes)
      for (int& l : code) l = (l - 1 + shift) % m + 1;
    std::sort(codes.begin(), codes.end());
    if (best.empty() || codes < best) best = std::move(codes);
  }
  return best;
}

}  // namespace

bool isomorphic(const KnotDiagram& a, const KnotDiagram& b) {
  return a.crossing_count() == b.crossing_count() && canonical_form(a) == canonical_form(b);
}

}  // namespace quasitree
