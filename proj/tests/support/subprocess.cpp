#include "support/subprocess.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <fstream>
#include <stdexcept>

namespace testsup {

namespace {

std::string shell_quote(const std::string& s) {
    std::string q = "'";
    for (const char c : s) {
        if (c == '\'')
            q += "'\\''";
        else
            q += c;
    }
    q += "'";
    return q;
}

std::filesystem::path unique_path(const std::string& stem) {
    static std::atomic<unsigned> counter{0};
    return std::filesystem::temp_directory_path() /
           (stem + "_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
}

}  // namespace

RunResult run_process(const std::vector<std::string>& argv, const std::filesystem::path& cwd) {
    const auto out_path = unique_path("ascheck_out");
    const auto err_path = unique_path("ascheck_err");

    std::string cmd;
    if (!cwd.empty()) cmd += "cd " + shell_quote(cwd.string()) + " && ";
    for (const auto& a : argv) cmd += shell_quote(a) + " ";
    cmd += "> " + shell_quote(out_path.string()) + " 2> " + shell_quote(err_path.string());

    const int raw = std::system(cmd.c_str());
    RunResult r;
    if (raw == -1)
        r.exit_code = -1;
    else if (WIFEXITED(raw))
        r.exit_code = WEXITSTATUS(raw);
    else if (WIFSIGNALED(raw))
        r.exit_code = 128 + WTERMSIG(raw);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    std::filesystem::remove(out_path);
    std::filesystem::remove(err_path);
    return r;
}

TempDir::TempDir() : path_(unique_path("ascheck_tmp")) {
    std::filesystem::create_directories(path_);
}

TempDir::~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
}

std::filesystem::path write_script(const std::filesystem::path& path, const std::string& body) {
    {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + path.string());
        out << body;
    }
    std::filesystem::permissions(path,
                                 std::filesystem::perms::owner_all |
                                     std::filesystem::perms::group_read |
                                     std::filesystem::perms::group_exec |
                                     std::filesystem::perms::others_read |
                                     std::filesystem::perms::others_exec,
                                 std::filesystem::perm_options::replace);
    return path;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return {};
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace testsup
