#pragma once

// The length-48 moonshine frame and a scripted check of its code-level data.

#include <string>
#include <vector>

#include "framed/gf2.hpp"
#include "framed/qseries.hpp"

namespace framed::moonshine {

struct Frame {
    LinearCode c;  // D^⊥, dimension 41
    LinearCode d;  // dimension 7
    Codeword xi;
    Codeword kappa;
};

Codeword word(std::string_view bits);
LinearCode rm14();
/// D from its generators and C = D^⊥; checks C against the block description
/// {(a,b,c) : a, b, c even, a+b+c in RM(2,4)}.
Frame build_moonshine_codes();

/// {(a,b,c) : a, b, c in RM(2,4), a+b+c in RM(1,4)}.
LinearCode p_closed_form();
/// span{1^16 0^32, 0^32 1^16, (a,a,a)} over the listed D0 directions.
LinearCode d0_expected();
LinearCode xi_subcode_expected();
WeightEnumerator enumerator_from_pairs(std::span<const std::pair<int, int>> pairs);

struct DemoStep {
    int index = 0;
    std::string name;
    bool pass = false;
    std::string detail;
};

struct DemoReport {
    std::int64_t truncation = kDefaultTruncation;
    std::vector<DemoStep> steps;
    QSeries mckay_thompson;

    bool pass() const;
    std::string to_text() const;
    std::string to_json() const;
};

/// Runs every check in order and stops at the first failing step.
DemoReport run_demo(const Frame& frame, std::int64_t truncation = kDefaultTruncation,
                    const Limits& limits = {});
DemoReport run_demo(std::int64_t truncation = kDefaultTruncation, const Limits& limits = {});

}  // namespace framed::moonshine
