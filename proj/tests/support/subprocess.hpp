#pragma once

#include <filesystem>
#include <string>
#include <vector>

// Helpers for tests that drive the real CLI binary or scratch directories.
namespace testsup {

struct RunResult {
    int exit_code = -1;
    std::string out;
    std::string err;
};

// Run a program through the shell, capturing exit code, stdout, and stderr.
// Arguments are single-quoted, so they pass through verbatim.
RunResult run_process(const std::vector<std::string>& argv,
                      const std::filesystem::path& cwd = {});

// Unique scratch directory, removed on destruction.
class TempDir {
public:
    TempDir();
    ~TempDir();
    TempDir(const TempDir&) = delete;
    TempDir& operator=(const TempDir&) = delete;

    const std::filesystem::path& path() const { return path_; }
    std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

private:
    std::filesystem::path path_;
};

// Write a small executable script (for fake models in tests).
std::filesystem::path write_script(const std::filesystem::path& path, const std::string& body);

// Whole file as a string.
std::string slurp(const std::filesystem::path& path);

}  // namespace testsup
