#pragma once

// Witness table files: records of
//   interval <lo> <hi>
//   poly <c0> <c1> ... <cn>
// separated by blank lines; lines starting with '#' are comments.

#include <istream>
#include <string>
#include <variant>
#include <vector>

#include "mic/certify.hpp"
#include "mic/farey.hpp"

namespace mic {

struct TableEntry {
  FareyPair pair;
  IntPoly poly;
  std::size_t line = 0;  ///< line of the interval record
};

/// Errors carry "<source>:<line>: <reason>".
std::vector<TableEntry> parse_table(std::istream& in, const std::string& source = "<input>");
std::vector<TableEntry> parse_table_file(const std::string& path);

/// Either a record or the reason it could not be checked.
using EntryOutcome = std::variant<WitnessRecord, std::string>;

/// verify_witness for every entry, `threads` at a time (0 picks the hardware
/// count). Outcomes follow entry order.
std::vector<EntryOutcome> verify_entries(const std::vector<TableEntry>& entries, unsigned threads = 0,
                                         const CertifyOptions& options = {});

}  // namespace mic
