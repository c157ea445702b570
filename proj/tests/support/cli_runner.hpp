#ifndef SLAM_TESTS_SUPPORT_CLI_RUNNER_HPP_
#define SLAM_TESTS_SUPPORT_CLI_RUNNER_HPP_

#include <filesystem>
#include <string>
#include <string_view>

namespace slam::testing {

/// Self-deleting scratch directory for test fixtures.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const noexcept { return path_; }
    /// Writes content to <dir>/name and returns the full path.
    std::filesystem::path file(std::string_view name, std::string_view content) const;

private:
    std::filesystem::path path_;
};

struct CliResult {
    int exit_code;
    std::string out;
    std::string err;
};

/// Runs `binary args...`, capturing stdout/stderr via files under scratch.
CliResult run_cli(const std::string& binary, const std::string& args, const TempDir& scratch);

std::string slurp(const std::filesystem::path& path);

}  // namespace slam::testing

#endif  // SLAM_TESTS_SUPPORT_CLI_RUNNER_HPP_
