#include "qenum/corpus.hpp"

#include "qenum/errors.hpp"

namespace qenum {

const std::vector<CorpusEntry>& corpus() {
    static const std::vector<CorpusEntry> entries = {
        {"bell2",
         "# Bell pair over F_2\n"
         "q 2\n"
         "n 2\n"
         "gen 1 1 | 0 0\n"
         "gen 0 0 | 1 1\n",
         1, true},
        {"trivial1-q2",
         "q 2\n"
         "n 1\n",
         2, false},
        {"xx2",
         "# single XX generator on two qubits\n"
         "q 2\n"
         "n 2\n"
         "gen 1 1 | 0 0\n",
         2, false},
        {"rep3",
         "# Z-type repetition checks on three qubits\n"
         "q 2\n"
         "n 3\n"
         "gen 0 0 0 | 1 1 0\n"
         "gen 0 0 0 | 0 1 1\n",
         2, false},
        {"bell3",
         "# Bell-type state over F_3\n"
         "q 3\n"
         "n 2\n"
         "gen 1 1 | 0 0\n"
         "gen 0 0 | 1 2\n",
         1, true},
        {"trivial1-q3",
         "q 3\n"
         "n 1\n",
         3, false},
        {"x4",
         "# one X generator over F_4\n"
         "q 4\n"
         "n 1\n"
         "gen 1 | 0\n",
         2, false},
        {"z5",
         "# full Z line over F_5\n"
         "q 5\n"
         "n 1\n"
         "gen 0 | 1\n",
         1, true},
    };
    return entries;
}

const CorpusEntry& corpus_entry(const std::string& name) {
    for (const CorpusEntry& e : corpus())
        if (e.name == name) return e;
    throw input_error("unknown corpus code '" + name + "'");
}

StabilizerCode corpus_code(const std::string& name) {
    return StabilizerCode::parse(corpus_entry(name).text);
}

} // namespace qenum
