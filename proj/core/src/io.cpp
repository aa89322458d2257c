#include "hrg/io.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "hrg/errors.hpp"

namespace hrg {

namespace {

void reject_newlines(std::string_view text, const char* what) {
  if (text.find('\n') != std::string_view::npos ||
      text.find('\r') != std::string_view::npos) {
    throw InvalidParamsError(std::string(what) + " must not contain newlines");
  }
}

}  // namespace

void write_graph(const PartiteGraph& g, std::ostream& out,
                 std::string_view manifest) {
  out << "#hrg v1\n";
  if (!manifest.empty()) {
    reject_newlines(manifest, "manifest");
    out << "#manifest " << manifest << "\n";
  }

  // Files always carry dense ids 0..V-1 in part order; sparse graphs (links)
  // are renumbered on the way out.
  std::map<VertexId, VertexId> dense_id;
  VertexId next = 0;
  for (int p = 0; p < g.nparts(); ++p) {
    const auto part = g.part(p);
    out << "#part " << p << ' ' << part.size() << "\n";
    for (VertexId v : part) dense_id.emplace(v, next++);
  }
  if (g.has_labels()) {
    for (int p = 0; p < g.nparts(); ++p) {
      for (VertexId v : g.part(p)) {
        const std::string& label = g.label(v);
        if (label.empty()) continue;
        reject_newlines(label, "vertex label");
        out << "#label " << dense_id.at(v) << ' ' << label << "\n";
      }
    }
  }
  std::vector<std::pair<VertexId, VertexId>> edges;
  edges.reserve(static_cast<std::size_t>(g.num_edges()));
  for (VertexId v : g.vertices()) {
    for (VertexId u : g.neighbors(v)) {
      if (v < u) {
        const auto [a, b] = std::minmax(dense_id.at(v), dense_id.at(u));
        edges.emplace_back(a, b);
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  for (const auto& [u, v] : edges) out << u << ' ' << v << "\n";
  if (!out) throw IoError("write failed");
}

PartiteGraph read_graph(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw IoError("empty input");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "#hrg v1") {
    throw IoError("unrecognized header: expected '#hrg v1', got '" + line + "'");
  }

  std::vector<std::int64_t> part_sizes;
  std::vector<std::pair<VertexId, std::string>> labels;
  std::vector<std::pair<VertexId, VertexId>> edges;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fail = [&](const std::string& why) -> IoError {
      return IoError("line " + std::to_string(line_no) + ": " + why);
    };
    if (line[0] == '#') {
      std::istringstream ss(line);
      std::string tag;
      ss >> tag;
      if (tag == "#part") {
        std::int64_t index = -1, size = -1;
        std::string extra;
        if (!(ss >> index >> size) || (ss >> extra)) {
          throw fail("malformed #part line");
        }
        if (index != static_cast<std::int64_t>(part_sizes.size())) {
          throw fail("part indices must be consecutive from 0, got " +
                     std::to_string(index));
        }
        if (size < 0) throw fail("negative part size");
        part_sizes.push_back(size);
      } else if (tag == "#label") {
        std::int64_t id = -1;
        if (!(ss >> id) || id < 0) throw fail("malformed #label line");
        std::string text;
        std::getline(ss, text);
        if (!text.empty() && text.front() == ' ') text.erase(text.begin());
        if (text.empty()) throw fail("empty label text");
        labels.emplace_back(static_cast<VertexId>(id), text);
      }
      // Other comment lines (e.g. #manifest) are skipped.
      continue;
    }
    std::istringstream ss(line);
    std::int64_t u = -1, v = -1;
    std::string extra;
    if (!(ss >> u >> v) || (ss >> extra)) throw fail("malformed edge line");
    if (u < 0 || v < 0 || u >= v) {
      throw fail("edge endpoints must satisfy 0 <= u < v");
    }
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (part_sizes.empty()) throw IoError("no #part lines");

  PartiteGraphBuilder builder(part_sizes);
  const std::int64_t total = builder.total_vertices();
  try {
    std::vector<bool> labeled(static_cast<std::size_t>(total), false);
    for (const auto& [id, text] : labels) {
      if (id >= total) {
        throw IoError("label names vertex " + std::to_string(id) +
                      " outside 0.." + std::to_string(total - 1));
      }
      if (labeled[static_cast<std::size_t>(id)]) {
        throw IoError("vertex " + std::to_string(id) + " labeled twice");
      }
      labeled[static_cast<std::size_t>(id)] = true;
      builder.set_label(id, text);
    }
    for (const auto& [u, v] : edges) {
      if (v >= total) {
        throw IoError("edge names vertex " + std::to_string(v) +
                      " outside 0.." + std::to_string(total - 1));
      }
      builder.add_edge(u, v);
    }
  } catch (const InvalidParamsError& e) {
    throw IoError(e.what());  // same-part edge, label collision, ...
  }
  PartiteGraph g = builder.build();
  if (g.duplicate_edges_removed() != 0) throw IoError("duplicate edge lines");
  return g;
}

void save_graph(const PartiteGraph& g, const std::string& path,
                std::string_view manifest) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot open '" + path + "' for writing");
  write_graph(g, out, manifest);
  out.flush();
  if (!out) throw IoError("write to '" + path + "' failed");
}

PartiteGraph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "' for reading");
  return read_graph(in);
}

void write_dot(const PartiteGraph& g, std::ostream& out) {
  if (g.num_vertices() >= 2000) {
    throw CapacityError("DOT export is offered for graphs under 2000 "
                        "vertices; this one has " +
                        std::to_string(g.num_vertices()));
  }
  out << "graph {\n";
  for (int p = 0; p < g.nparts(); ++p) {
    for (VertexId v : g.part(p)) {
      out << "  " << v << " [part=" << p;
      if (g.has_labels() && !g.label(v).empty()) {
        std::string escaped;
        for (char c : g.label(v)) {
          if (c == '"' || c == '\\') escaped.push_back('\\');
          escaped.push_back(c);
        }
        out << " label=\"" << escaped << '"';
      }
      out << "];\n";
    }
  }
  for (VertexId v : g.vertices()) {
    for (VertexId u : g.neighbors(v)) {
      if (v < u) out << "  " << v << " -- " << u << ";\n";
    }
  }
  out << "}\n";
  if (!out) throw IoError("write failed");
}

}  // namespace hrg
