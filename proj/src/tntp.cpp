#include "netclass/tntp.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <istream>
#include <map>
#include <sstream>
#include <string_view>

#include "netclass/errors.hpp"
#include "netclass/strings.hpp"

namespace netclass::tntp {

namespace {

std::string_view strip_comment(std::string_view line) {
  auto pos = line.find('~');
  return pos == std::string_view::npos ? line : line.substr(0, pos);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_fields(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_double(std::string_view s, double& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  return ec == std::errc{} && ptr == last;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  const char* first = s.data();
  const char* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, out);
  if (ec == std::errc{} && ptr == last) return true;
  // tables sometimes carry integral values written as decimals
  double d;
  if (parse_double(s, d) && d == static_cast<std::int64_t>(d)) {
    out = static_cast<std::int64_t>(d);
    return true;
  }
  return false;
}

bool looks_like_header(const std::vector<std::string_view>& fields) {
  // a header row has a non-numeric first field (e.g. "Init" or "Node")
  double ignored;
  return !fields.empty() && !parse_double(fields[0], ignored);
}

}  // namespace

std::optional<std::string> NetFile::metadata_value(const std::string& tag) const {
  for (const auto& [k, v] : metadata)
    if (k == tag) return v;
  return std::nullopt;
}

std::optional<std::int64_t> NetFile::metadata_int(const std::string& tag) const {
  auto v = metadata_value(tag);
  if (!v) return std::nullopt;
  std::int64_t value;
  if (!parse_int(trim(*v), value)) return std::nullopt;
  return value;
}

NetFile parse_net_file(std::istream& in, const ParseOptions& opts) {
  NetFile net;
  std::string line;
  bool metadata_done = false;
  bool saw_metadata_tag = false;
  std::size_t line_no = 0;

  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(strip_comment(line));
    if (body.empty()) continue;

    if (!metadata_done && body.front() == '<') {
      auto close = body.find('>');
      if (close == std::string_view::npos)
        throw error(errc::malformed_metadata,
                    "unterminated metadata tag at line " +
                        std::to_string(line_no));
      std::string tag(trim(body.substr(1, close - 1)));
      std::string value(trim(body.substr(close + 1)));
      if (tag == "END OF METADATA") {
        metadata_done = true;
        continue;
      }
      saw_metadata_tag = true;
      net.metadata.emplace_back(std::move(tag), std::move(value));
      continue;
    }

    if (!metadata_done && saw_metadata_tag)
      throw error(errc::malformed_metadata,
                  "link table begins before <END OF METADATA>");
    metadata_done = true;  // files without a metadata block are accepted

    auto fields = split_fields(body);
    if (!fields.empty() && fields.back() == ";") fields.pop_back();
    if (!fields.empty() && fields.back().back() == ';') {
      fields.back().remove_suffix(1);
      if (fields.back().empty()) fields.pop_back();
    }
    if (fields.empty()) continue;
    if (looks_like_header(fields)) continue;

    if (fields.size() < 2)
      throw error(errc::malformed_row,
                  "link row with fewer than 2 fields at line " +
                      std::to_string(line_no));

    RawLinkRecord rec;
    if (!parse_int(fields[0], rec.init_node) ||
        !parse_int(fields[1], rec.term_node))
      throw error(errc::malformed_row,
                  "non-numeric init/term field at line " +
                      std::to_string(line_no));
    double* numeric[7] = {&rec.capacity, &rec.length, &rec.free_flow_time,
                          &rec.b,        &rec.power,  &rec.speed,
                          &rec.toll};
    for (std::size_t i = 0; i < 7; ++i) {
      if (2 + i >= fields.size()) break;  // short rows zero-fill
      if (!parse_double(fields[2 + i], *numeric[i]))
        throw error(errc::malformed_row,
                    "non-numeric link field at line " + std::to_string(line_no));
    }
    if (fields.size() >= 10) {
      std::int64_t t;
      if (!parse_int(fields[9], t))
        throw error(errc::malformed_row,
                    "non-numeric link type at line " + std::to_string(line_no));
      rec.link_type = static_cast<int>(t);
    }
    if (rec.init_node <= 0 || rec.term_node <= 0)
      throw error(errc::malformed_row,
                  "node ids must be positive at line " + std::to_string(line_no));
    if (rec.length < 0)
      throw error(errc::malformed_row,
                  "negative link length at line " + std::to_string(line_no));
    net.links.push_back(rec);
  }

  if (!metadata_done && saw_metadata_tag)
    throw error(errc::malformed_metadata, "missing <END OF METADATA>");

  if (auto declared = net.metadata_int("NUMBER OF LINKS")) {
    if (*declared != static_cast<std::int64_t>(net.links.size())) {
      std::string msg = "declared NUMBER OF LINKS " + std::to_string(*declared) +
                        " but parsed " + std::to_string(net.links.size());
      if (!opts.allow_count_mismatch)
        throw count_mismatch_error(net.links.size(),
                                   static_cast<std::size_t>(*declared), msg);
      net.warnings.push_back(msg);
    }
  }
  return net;
}

NetFile parse_net_file_text(const std::string& text, const ParseOptions& opts) {
  std::istringstream in(text);
  return parse_net_file(in, opts);
}

std::vector<NodeCoordinate> parse_node_file(std::istream& in) {
  std::vector<NodeCoordinate> coords;
  std::vector<std::int64_t> seen;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(strip_comment(line));
    if (body.empty()) continue;
    auto fields = split_fields(body);
    if (!fields.empty() && fields.back() == ";") fields.pop_back();
    if (!fields.empty() && fields.back().back() == ';') {
      fields.back().remove_suffix(1);
      if (fields.back().empty()) fields.pop_back();
    }
    if (fields.empty()) continue;
    if (looks_like_header(fields)) continue;
    if (fields.size() < 3)
      throw error(errc::malformed_row,
                  "node row with fewer than 3 fields at line " +
                      std::to_string(line_no));
    NodeCoordinate c;
    if (!parse_int(fields[0], c.node_id) || !parse_double(fields[1], c.x) ||
        !parse_double(fields[2], c.y))
      throw error(errc::malformed_row,
                  "non-numeric node field at line " + std::to_string(line_no));
    if (c.node_id <= 0)
      throw error(errc::malformed_row,
                  "node ids must be positive at line " + std::to_string(line_no));
    seen.push_back(c.node_id);
    coords.push_back(c);
  }
  std::sort(seen.begin(), seen.end());
  auto dup = std::adjacent_find(seen.begin(), seen.end());
  if (dup != seen.end())
    throw error(errc::duplicate_node,
                "duplicate node id " + std::to_string(*dup));
  return coords;
}

std::vector<NodeCoordinate> parse_node_file_text(const std::string& text) {
  std::istringstream in(text);
  return parse_node_file(in);
}

std::string serialize_net_file(const NetFile& net) {
  std::string out;
  for (const auto& [tag, value] : net.metadata) {
    out += '<' + tag + "> " + value + '\n';
  }
  out += "<END OF METADATA>\n\n";
  out += "~ init term capacity length fftime b power speed toll type ;\n";
  for (const RawLinkRecord& r : net.links) {
    out += std::to_string(r.init_node) + '\t' + std::to_string(r.term_node);
    for (double v : {r.capacity, r.length, r.free_flow_time, r.b, r.power,
                     r.speed, r.toll}) {
      out += '\t';
      out += format_double(v);
    }
    out += '\t' + std::to_string(r.link_type) + "\t;\n";
  }
  return out;
}

BuildResult build_graph(const std::vector<RawLinkRecord>& links,
                        const std::vector<NodeCoordinate>* coords) {
  std::vector<std::int64_t> ids;
  ids.reserve(links.size() * 2);
  for (const auto& r : links) {
    ids.push_back(r.init_node);
    ids.push_back(r.term_node);
  }
  if (coords)
    for (const auto& c : *coords) ids.push_back(c.node_id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::map<std::int64_t, int> dense;
  for (std::size_t i = 0; i < ids.size(); ++i) dense[ids[i]] = static_cast<int>(i);

  BuildResult result;
  std::vector<std::pair<int, int>> edges;
  std::vector<double> lengths;
  edges.reserve(links.size());
  lengths.reserve(links.size());
  std::vector<std::pair<int, int>> seen;
  seen.reserve(links.size());
  for (const auto& r : links) {
    const int u = dense[r.init_node];
    const int v = dense[r.term_node];
    if (u == v) {
      ++result.self_loops_dropped;
      continue;
    }
    edges.emplace_back(u, v);
    lengths.push_back(r.length);
    seen.emplace_back(u, v);
  }
  std::sort(seen.begin(), seen.end());
  result.duplicate_edges_collapsed =
      static_cast<std::int64_t>(seen.size() -
                                (std::unique(seen.begin(), seen.end()) -
                                 seen.begin()));

  result.graph = DirectedGraph(static_cast<int>(ids.size()), edges, lengths);
  result.graph.set_original_ids(std::move(ids));
  return result;
}

}  // namespace netclass::tntp
