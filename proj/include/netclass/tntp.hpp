#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netclass/graph.hpp"

namespace netclass::tntp {

/// One row of a TNTP link table. Trailing optional fields missing from a
/// row are zero-filled.
struct RawLinkRecord {
  std::int64_t init_node = 0;
  std::int64_t term_node = 0;
  double capacity = 0.0;
  double length = 0.0;  // dataset-native unit, treated as dimensionless
  double free_flow_time = 0.0;
  double b = 0.0;
  double power = 0.0;
  double speed = 0.0;
  double toll = 0.0;
  int link_type = 0;

  friend bool operator==(const RawLinkRecord&, const RawLinkRecord&) = default;
};

struct NodeCoordinate {
  std::int64_t node_id = 0;
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const NodeCoordinate&, const NodeCoordinate&) = default;
};

struct ParseOptions {
  /// Downgrade a NUMBER OF LINKS mismatch to a warning instead of throwing.
  bool allow_count_mismatch = false;
};

struct NetFile {
  /// `<TAG> value` metadata in file order.
  std::vector<std::pair<std::string, std::string>> metadata;
  std::vector<RawLinkRecord> links;
  std::vector<std::string> warnings;

  std::optional<std::string> metadata_value(const std::string& tag) const;
  std::optional<std::int64_t> metadata_int(const std::string& tag) const;
};

/// Parses TNTP .net text: `<TAG> value` metadata lines closed by
/// `<END OF METADATA>`, then a whitespace-separated link table whose data
/// rows end with `;`. `~` starts a comment; blank lines are skipped; an
/// optional header row naming the columns is ignored.
///
/// Throws error(malformed_metadata) when END OF METADATA is missing,
/// error(malformed_row) on a non-numeric init/term field, and
/// count_mismatch_error when NUMBER OF LINKS disagrees with the parsed row
/// count (downgradable via ParseOptions).
NetFile parse_net_file(std::istream& in, const ParseOptions& opts = {});
NetFile parse_net_file_text(const std::string& text,
                            const ParseOptions& opts = {});

/// Rows `node x y` with optional header and optional trailing `;`.
/// Throws error(malformed_row) and error(duplicate_node).
std::vector<NodeCoordinate> parse_node_file(std::istream& in);
std::vector<NodeCoordinate> parse_node_file_text(const std::string& text);

/// Writes a link table back to TNTP text (metadata block + rows). Numeric
/// fields use shortest round-trip formatting, so parse -> serialize ->
/// parse is the identity on the record list.
std::string serialize_net_file(const NetFile& net);

struct BuildResult {
  DirectedGraph graph;
  std::int64_t duplicate_edges_collapsed = 0;
  std::int64_t self_loops_dropped = 0;
};

/// Builds a simple directed graph from parsed links. The node set is the
/// union of endpoint ids and coordinate-only ids; ids are remapped onto
/// dense indices in ascending id order. Parallel duplicates collapse to the
/// first record (counted), self-loops are dropped (counted).
BuildResult build_graph(const std::vector<RawLinkRecord>& links,
                        const std::vector<NodeCoordinate>* coords = nullptr);

}  // namespace netclass::tntp
