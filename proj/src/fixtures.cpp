#include "polyball/fixtures.hpp"

namespace polyball {

const std::vector<DemoFixture>& demo_fixtures() {
    static const std::vector<DemoFixture> fixtures = {
        {"optimal", R"json({
  "version": 1,
  "basis": [["3", "5/2", "2"], ["2", "5/2", "3"]],
  "source": "bundled demo: 2-basis in l_inf^3 whose middle component class is redundant; the span is isometric to l_inf^2"
})json"},
        {"y2-closure", R"json({
  "version": 1,
  "component_set": [["7", "-5"], ["-5", "6"], ["0", "1"], ["1/2", "3/2"], ["2/3", "5/3"], ["1", "2"]],
  "source": "bundled demo: finite closure model of a sequence-space 2-basis (the limit component is supplied explicitly)"
})json"},
        {"y3", R"json({
  "version": 1,
  "basis": [["3", "0", "1", "5/2"], ["2", "5", "0", "4"], ["1", "1", "5", "7/2"]],
  "source": "bundled demo: 3-basis in l_inf^4 with four strict classes, hence not isometric to l_inf^3"
})json"},
        {"w1", R"json({
  "version": 1,
  "basis": [["3", "0", "2"], ["0", "3", "2"]],
  "source": "bundled demo: 2-basis in l_inf^3 where every class is strict (hexagonal coefficient ball)"
})json"},
        {"w2", R"json({
  "version": 1,
  "basis": [["4", "7/2", "3"], ["3", "7/2", "4"]],
  "source": "bundled demo: 2-basis in l_inf^3 isometric to l_inf^2"
})json"},
        {"lastex", R"json({
  "version": 1,
  "extreme_points": [["1", "0", "0"], ["0", "1", "0"], ["1", "1", "0"], ["0", "0", "1"]],
  "n": 2,
  "source": "bundled demo: operator-space input with 8 extreme points (4 sign pairs); W lives in l_inf^4"
})json"},
        {"hexagon", R"json({
  "version": 1,
  "extreme_points": [["1", "0"], ["0", "1"], ["1", "1"]],
  "n": 2,
  "source": "bundled demo: affine-regular hexagon extreme set (rational model of the regular hexagon)"
})json"},
        {"prop13", R"json({
  "version": 1,
  "component_set": [["3/2", "1/2"], ["5/4", "3/4"], ["9/8", "7/8"], ["17/16", "15/16"], ["1", "1"]],
  "source": "bundled demo: finite closure model of a geometric-parameter sequence plus its limit component"
})json"},
        {"weak-vs-strict", R"json({
  "version": 1,
  "basis": [["1", "1", "1"], ["0", "1", "-1"]],
  "source": "bundled demo: witness basis where one class is weak-only, so the weak and strict verdicts differ"
})json"},
    };
    return fixtures;
}

const DemoFixture* find_demo(const std::string& name) {
    for (const auto& f : demo_fixtures())
        if (f.name == name) return &f;
    return nullptr;
}

}  // namespace polyball
