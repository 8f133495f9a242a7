#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "input.hpp"
#include "iwmod/dvr.hpp"
#include "iwmod/finabel.hpp"
#include "iwmod/series.hpp"
#include "iwmod/valuation.hpp"

namespace iwmod::cli {

struct Options {
    std::optional<int> precision;
    std::uint64_t seed = 1;
};

/// Result of one job: the structured payload plus its human-readable lines.
struct Report {
    json result = json::object();
    std::vector<std::string> text;
    /// Ring and precision actually used, for the provenance block.
    std::string ring = "none";
    json precision = nullptr;
};

const std::vector<std::string>& command_names();
Report run_command(const std::string& command, const Document& doc, const Options& opt);

// shared helpers -----------------------------------------------------------------

struct RingChoice {
    const Dvr* ring;
    std::string name;
};

/// `zp:P`, `ramified:P` or `unramified:P:D`; precision from the flag, then the
/// file key `precision`, then the ring default.
RingChoice parse_ring(const Node& root, const Options& opt);
DvrElem parse_elem(const Dvr& R, const Node& n);
std::vector<DvrElem> parse_elems(const Dvr& R, const Node& n);
TruncSeries parse_series(const Dvr& R, const Node& n);
FinAbPGroup parse_group(const Node& root);
GroupElem parse_group_elem(const FinAbPGroup& G, const Node& n);

std::string order_string(const PPower& q);
json order_json(const PPower& q);
json elem_json(const DvrElem& x);
json group_json(const FinAbPGroup& G);

Report cmd_adapted_basis(const Document& d, const Options& opt);
Report cmd_kerim_check(const Document& d, const Options& opt);
Report cmd_coinv(const Document& d, const Options& opt);
Report cmd_char(const Document& d, const Options& opt);
Report cmd_twovar_char(const Document& d, const Options& opt);
Report cmd_classify_nonsplit(const Document& d, const Options& opt);
Report cmd_classify_lambda2(const Document& d, const Options& opt);
Report cmd_cross_validate(const Document& d, const Options& opt);

}  // namespace iwmod::cli
