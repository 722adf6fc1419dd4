#pragma once

#include <string>
#include <vector>

namespace polyball {

/// A bundled demo dataset: a named problem file shipped inside the binary.
struct DemoFixture {
    std::string name;
    std::string json;
};

const std::vector<DemoFixture>& demo_fixtures();
const DemoFixture* find_demo(const std::string& name);

}  // namespace polyball
