#ifndef WCP_TESTS_SHARED_HPP
#define WCP_TESTS_SHARED_HPP

#include <wcp/wcp.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace testing_support {

// built once per process; the mined fixture runs the miner
inline const std::vector<wcp::Fixture>& fixtures() {
    static const std::vector<wcp::Fixture> all = wcp::standard_fixtures();
    return all;
}

inline const wcp::Fixture& fixture(const std::string& name) {
    for (const auto& fx : fixtures())
        if (fx.name == name) return fx;
    throw std::out_of_range(name);
}

inline std::string fixture_path(const std::string& file) { return std::string(WCP_FIXTURE_DIR) + "/" + file; }

// adds `by` to one entry
inline wcp::FMor bump(wcp::FMor f, std::size_t row, std::size_t col, long long by = 1) {
    f.mat(row, col) = f.mat(row, col) + wcp::Scalar(f.field(), by);
    return f;
}

} // namespace testing_support

#endif
