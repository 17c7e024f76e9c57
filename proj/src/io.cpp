#include "cglab/io.hpp"

#include <fstream>
#include <sstream>

namespace cglab {

std::string to_text(const Presentation& p) {
  std::ostringstream out;
  out << "m=" << p.generator_count << "\n";
  for (const auto& r : p.relators) out << r.str() << "\n";
  return out.str();
}

Presentation presentation_from_text(const std::string& text) {
  Presentation p;
  std::istringstream in(text);
  std::string line;
  bool have_m = false;
  while (std::getline(in, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    while (!line.empty() && (line.back() == ' ' || line.back() == '\r' || line.back() == '\t'))
      line.pop_back();
    std::size_t start = line.find_first_not_of(" \t");
    if (start == std::string::npos) continue;
    line.erase(0, start);
    if (!have_m) {
      if (line.rfind("m=", 0) != 0)
        throw std::invalid_argument("presentation file must start with m=<int>");
      p.generator_count = std::stoi(line.substr(2));
      have_m = true;
      continue;
    }
    p.relators.push_back(Word::parse(line));
  }
  if (!have_m) throw std::invalid_argument("presentation file missing m=<int> line");
  p.validate();
  return p;
}

std::string to_csv(const CountTable& t) {
  std::ostringstream out;
  out << "kind,base,length,count\n";
  for (int l = 0; l <= t.exact_up_to; l++)
    out << to_string(t.kind) << "," << t.base << "," << l << ","
        << t.counts[static_cast<std::size_t>(l)].get_str() << "\n";
  return out.str();
}

CountTable count_table_from_csv(const std::string& csv) {
  CountTable t;
  std::istringstream in(csv);
  std::string line;
  if (!std::getline(in, line) || line.rfind("kind,base,length,count", 0) != 0)
    throw std::invalid_argument("count table CSV missing header");
  t.exact_up_to = -1;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream row(line);
    std::string kind, base, length, count;
    if (!std::getline(row, kind, ',') || !std::getline(row, base, ',') ||
        !std::getline(row, length, ',') || !std::getline(row, count, ','))
      throw std::invalid_argument("bad count table row: " + line);
    t.kind = kind == "plain" ? WordKind::plain : WordKind::reduced;
    t.base = std::stoi(base);
    int l = std::stoi(length);
    if (l != t.exact_up_to + 1) throw std::invalid_argument("count table rows must be contiguous");
    t.exact_up_to = l;
    t.counts.emplace_back(count);
  }
  if (t.exact_up_to < 0) throw std::invalid_argument("empty count table");
  return t;
}

json to_json(const ExponentEstimate& e) {
  json j{{"kind", e.kind == ExponentKind::eta ? "eta" : "theta"},
         {"base", e.base},
         {"lower_bound", e.lower_bound},
         {"raw_lower", std::isnan(e.raw_lower) ? json() : json(e.raw_lower)},
         {"empty_kernel", e.empty_kernel},
         {"point_estimate", e.point_estimate},
         {"estimator", "two-point-slope"},
         {"window", {e.window_lo, e.window_hi}}};
  if (e.certified_upper) j["certified_upper"] = *e.certified_upper;
  return j;
}

json to_json(const EstimatePair& pair) {
  return json{{"eta", to_json(pair.eta)},
              {"theta", to_json(pair.theta)},
              {"ball_radius", pair.ball_radius},
              {"ball_size", pair.ball_size},
              {"plain_table_fingerprint", pair.plain_fingerprint},
              {"reduced_table_fingerprint", pair.reduced_fingerprint}};
}

json to_json(const LocalityCertificate& cert) {
  return json{{"window", {cert.window_lo, cert.window_hi}},
              {"eta_window", cert.eta_window},
              {"factor", cert.factor},
              {"exp_bound", cert.exp_bound},
              {"certified_exponent", cert.certified_exponent},
              {"C", cert.C},
              {"A", cert.A},
              {"B", cert.B},
              {"m", cert.m},
              {"lambda", cert.lambda},
              {"base", cert.base},
              {"method", cert.method},
              {"table_fingerprint", cert.table_fingerprint},
              {"conditionality", cert.conditionality}};
}

json to_json(const Diagram& d) {
  json half_edges = json::array();
  for (std::size_t h = 0; h < d.half_edge_count(); h++)
    half_edges.push_back(json{{"mate", d.mate[h]},
                              {"next", d.next[h]},
                              {"label", static_cast<int>(d.label[h])}});
  json tags = json::array();
  for (const auto& [anchor, tag] : d.face_tags)
    tags.push_back(json{{"anchor", anchor},
                        {"relator", tag.relator},
                        {"rotation", tag.rotation},
                        {"orientation", tag.orientation}});
  return json{{"half_edges", half_edges},
              {"boundary_anchor", d.boundary_anchor},
              {"face_tags", tags}};
}

Diagram diagram_from_json(const json& j) {
  Diagram d;
  for (const auto& he : j.at("half_edges")) {
    d.mate.push_back(he.at("mate").get<std::int32_t>());
    d.next.push_back(he.at("next").get<std::int32_t>());
    d.label.push_back(static_cast<Letter>(he.at("label").get<int>()));
  }
  d.boundary_anchor = j.at("boundary_anchor").get<std::int32_t>();
  for (const auto& tg : j.at("face_tags"))
    d.face_tags.emplace(tg.at("anchor").get<std::int32_t>(),
                        FaceTag{tg.at("relator").get<int>(), tg.at("rotation").get<int>(),
                                tg.at("orientation").get<int>()});
  return d;
}

std::string to_dot(const Diagram& d) {
  // vertices = orbits of next
  std::vector<std::int32_t> vertex_of(d.half_edge_count(), -1);
  std::int32_t vcount = 0;
  for (std::size_t h = 0; h < d.half_edge_count(); h++) {
    if (vertex_of[h] >= 0) continue;
    auto k = static_cast<std::int32_t>(h);
    do {
      vertex_of[static_cast<std::size_t>(k)] = vcount;
      k = d.next[static_cast<std::size_t>(k)];
    } while (k != static_cast<std::int32_t>(h));
    vcount++;
  }
  std::ostringstream out;
  out << "digraph diagram {\n";
  for (std::int32_t v = 0; v < vcount; v++) out << "  v" << v << " [shape=point];\n";
  for (std::size_t h = 0; h < d.half_edge_count(); h++) {
    if (d.mate[h] < static_cast<std::int32_t>(h)) continue;
    Word letter;
    letter.push(d.label[h]);
    out << "  v" << vertex_of[h] << " -> v"
        << vertex_of[static_cast<std::size_t>(d.mate[h])] << " [label=\"" << letter.str()
        << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace cglab
