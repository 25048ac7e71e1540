#pragma once

// Wire formats shared by the command-line tool and the HTTP service.
//
// Partitions travel as fixed-length integer arrays (zeros kept) in JSON and
// as comma-separated integers in URLs and on the command line.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "mhrg/analysis.hpp"
#include "mhrg/engine.hpp"
#include "mhrg/verify.hpp"

namespace mhrg {

// Malformed textual input (not an integer list, bad JSON shape).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// Game graph plus Grundy table of one board, computed once.
struct BoardAnalysis {
    BoardParams board;
    GameGraph graph;
    GrundyTable table;
};

// Throws ResourceLimit past the guardrail.
BoardAnalysis analyze_board(const BoardParams& board);

// "3,1" -> {3, 1}. Throws ParseError on anything but comma-separated integers.
std::vector<int> parse_int_list(std::string_view text);

struct ViaBox {
    Box box;
    LrPair first_lr;
    HookOp op = HookOp::Single;
    std::optional<Box> second_box;
    std::optional<LrPair> second_lr;
};

struct OptionRecord {
    Partition to;
    // Move type of the first box (row-major) leading to `to`; different boxes
    // may reach the same option by different move types, see via_boxes.
    HookOp op = HookOp::Single;
    std::vector<ViaBox> via_boxes;
    int grundy = 0;
};

struct PositionRecord {
    int m = 0;
    int n = 0;
    Partition lambda;
    IndexSet index_set;
    Partition dual;
    bool member = false;
    std::optional<int> grundy;
    // "P" or "N" when member.
    std::optional<std::string> outcome;
};

PositionRecord make_position_record(const BoardAnalysis& data, const Partition& p);
// Options of a member position, ordered by destination.
std::vector<OptionRecord> make_option_records(const BoardAnalysis& data, const Partition& p);

nlohmann::json to_json(const Partition& p);
nlohmann::json to_json(Box b);
nlohmann::json to_json(LrPair lr);
nlohmann::json to_json(const MoveRecord& rec);
nlohmann::json to_json(const OptionRecord& rec);
nlohmann::json to_json(const PositionRecord& rec);
nlohmann::json to_json(const VerificationReport& report);

// Board summary: positions_total, members, start_grundy and the derived params.
nlohmann::json board_summary_json(const BoardAnalysis& data);

// Position record with its options, the Grundy-0 replies and the engine's choice.
nlohmann::json position_detail_json(const BoardAnalysis& data, const Partition& p);

// Full graph: every node with its Grundy value and option records carrying
// every move record. graph_from_json inverts it exactly.
nlohmann::json graph_to_json(const BoardAnalysis& data);
BoardAnalysis graph_from_json(const nlohmann::json& doc);

std::string graph_to_dot(const BoardAnalysis& data);

// One CSV line per record with a header row.
std::string position_records_csv(const std::vector<PositionRecord>& records);

} // namespace mhrg
