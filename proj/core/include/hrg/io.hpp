#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "hrg/multipartite.hpp"

namespace hrg {

/// Writes the line-oriented text form: a "#hrg v1" header, one
/// "#part <index> <size>" line per part, "#label <id> <text>" lines for
/// labeled vertices, then one "u v" line per edge with u < v, in ascending
/// order.  A non-empty `manifest` (a single line, typically JSON) is
/// embedded after the header as a "#manifest ..." comment, which import
/// skips like any unrecognized comment.  Graphs with sparse vertex ids
/// (links keep their host's ids) are written with fresh dense ids assigned
/// part-by-part in ascending old-id order.  Throws InvalidParamsError when
/// a label or the manifest contains a newline.
void write_graph(const PartiteGraph& g, std::ostream& out,
                 std::string_view manifest = {});

/// Parses the format written by write_graph.  Unrecognized "#" comment
/// lines and blank lines are ignored; part indices must be 0,1,2,...;
/// every edge line must satisfy u < v and name existing vertices; a
/// repeated edge or label is an error.  Throws IoError on malformed input
/// and CapacityError when the vertex count exceeds the default capacity.
PartiteGraph read_graph(std::istream& in);

/// File wrappers around write_graph/read_graph; IoError when the file
/// cannot be opened.
void save_graph(const PartiteGraph& g, const std::string& path,
                std::string_view manifest = {});
PartiteGraph load_graph(const std::string& path);

/// Graphviz form, for eyeballing small graphs only: throws CapacityError
/// for 2000 or more vertices.  Nodes carry their part index as an
/// attribute and their label when present.
void write_dot(const PartiteGraph& g, std::ostream& out);

}  // namespace hrg
