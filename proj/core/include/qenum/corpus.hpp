#pragma once

#include "qenum/stabilizer.hpp"

#include <string>
#include <vector>

namespace qenum {

// Small built-in codes with known exact parameters, used by the test
// suite and the self-check report.
struct CorpusEntry {
    std::string name;
    std::string text;   // StabilizerCode::parse input
    long K;
    bool self_dual;
};

const std::vector<CorpusEntry>& corpus();

// Throws input_error for unknown names.
const CorpusEntry& corpus_entry(const std::string& name);
StabilizerCode corpus_code(const std::string& name);

} // namespace qenum
