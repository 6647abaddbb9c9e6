#pragma once

#include <string>
#include <vector>

#include "quartic/pipeline.hpp"

namespace quartic {

enum class CorpusSource { Table1, Table2, Showcase, K14 };

std::string_view source_name(CorpusSource source);

struct CorpusRow {
    CorpusSource source = CorpusSource::Table1;
    std::string label;
    QuarticSolution expected;
    /// Compare role by role; false means compare terms as a multiset.
    bool positional = true;
    /// Registry id (or "three_plus/2:pq-identity") whose seed reproduces the
    /// row; empty for table rows.
    std::string config;
};

/// Table 1 (k+3 equation) then Table 2 (k+5 equation), k = 1..9 each.
/// In both tables the starred column is the one multiplied by k.
std::vector<CorpusRow> table_rows();

/// The worked solution printed for each config, plus the k = 2 (p,q) solution.
std::vector<CorpusRow> showcase_rows();

CorpusRow k14_row();

}  // namespace quartic
