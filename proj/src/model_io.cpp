#include "ascheck/model_io.hpp"

#include <fcntl.h>
#include <poll.h>
#include <signal.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstring>
#include <fstream>
#include <mutex>
#include <sstream>

#include "ascheck/errors.hpp"
#include "ascheck/numfmt.hpp"

namespace ascheck {

namespace {

using Clock = std::chrono::steady_clock;

std::string point_text(std::span<const double> x) {
    std::string s;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i != 0) s += ' ';
        s += numfmt::shortest(x[i]);
    }
    return s;
}

std::string command_text(const ModelCommand& cmd) {
    std::string s;
    for (std::size_t i = 0; i < cmd.argv.size(); ++i) {
        if (i != 0) s += ' ';
        s += cmd.argv[i];
    }
    return s;
}

[[noreturn]] void throw_model_error(ModelError::Kind kind, const ModelCommand& cmd,
                                    std::span<const double> x, const std::string& detail,
                                    int exit_status = 0) {
    std::string msg = "model `" + command_text(cmd) + "`: " + detail +
                      " (input: " + point_text(x) + ")";
    throw ModelError(kind, msg, {x.begin(), x.end()}, exit_status);
}

void close_fd(int& fd) {
    if (fd >= 0) {
        ::close(fd);
        fd = -1;
    }
}

// A child that exits before reading its whole input must surface as
// NonzeroExit, not kill this process with SIGPIPE.
void ignore_sigpipe() {
    static std::once_flag once;
    std::call_once(once, [] { ::signal(SIGPIPE, SIG_IGN); });
}

int remaining_ms(const std::optional<Clock::time_point>& deadline) {
    if (!deadline) return -1;
    auto left = std::chrono::duration_cast<std::chrono::milliseconds>(*deadline - Clock::now());
    auto ms = left.count();
    if (ms < 0) return 0;
    if (ms > 3600 * 1000) return 3600 * 1000;
    return static_cast<int>(ms);
}

// Reap the child after a timeout so no zombie is left behind.
void kill_and_reap(pid_t pid) {
    ::kill(pid, SIGKILL);
    int status = 0;
    while (::waitpid(pid, &status, 0) < 0 && errno == EINTR) {
    }
}

}  // namespace

EvaluationRecord run_model_record(const ModelCommand& cmd, std::span<const double> x) {
    if (cmd.argv.empty())
        throw ModelError(ModelError::Kind::spawn_failure, "model command is empty", {});
    if (cmd.timeout_sec && !(*cmd.timeout_sec > 0.0))
        throw ModelError(ModelError::Kind::spawn_failure, "model timeout must be positive", {});
    ignore_sigpipe();

    const auto start = Clock::now();
    std::optional<Clock::time_point> deadline;
    if (cmd.timeout_sec)
        deadline = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*cmd.timeout_sec));

    std::string input = point_text(x);
    input += '\n';

    int in_pipe[2] = {-1, -1};   // parent writes -> child stdin
    int out_pipe[2] = {-1, -1};  // child stdout -> parent reads
    if (::pipe(in_pipe) != 0 || ::pipe(out_pipe) != 0) {
        close_fd(in_pipe[0]);
        close_fd(in_pipe[1]);
        close_fd(out_pipe[0]);
        close_fd(out_pipe[1]);
        throw_model_error(ModelError::Kind::spawn_failure, cmd, x,
                          std::string("pipe failed: ") + std::strerror(errno));
    }

    const pid_t pid = ::fork();
    if (pid < 0) {
        close_fd(in_pipe[0]);
        close_fd(in_pipe[1]);
        close_fd(out_pipe[0]);
        close_fd(out_pipe[1]);
        throw_model_error(ModelError::Kind::spawn_failure, cmd, x,
                          std::string("fork failed: ") + std::strerror(errno));
    }
    if (pid == 0) {
        ::dup2(in_pipe[0], STDIN_FILENO);
        ::dup2(out_pipe[1], STDOUT_FILENO);
        ::close(in_pipe[0]);
        ::close(in_pipe[1]);
        ::close(out_pipe[0]);
        ::close(out_pipe[1]);
        std::vector<char*> argv;
        argv.reserve(cmd.argv.size() + 1);
        for (const auto& a : cmd.argv) argv.push_back(const_cast<char*>(a.c_str()));
        argv.push_back(nullptr);
        ::execvp(argv[0], argv.data());
        _exit(127);
    }

    close_fd(in_pipe[0]);
    close_fd(out_pipe[1]);
    int write_fd = in_pipe[1];
    int read_fd = out_pipe[0];
    ::fcntl(write_fd, F_SETFL, O_NONBLOCK);

    std::string output_text;
    std::size_t written = 0;
    bool timed_out = false;

    // Interleave writing the point and draining stdout so neither pipe can
    // stall the other; EPIPE just means the child stopped reading early.
    bool write_open = true;
    bool read_open = true;
    while (write_open || read_open) {
        struct pollfd fds[2];
        nfds_t nfds = 0;
        int widx = -1, ridx = -1;
        if (write_open) {
            widx = static_cast<int>(nfds);
            fds[nfds++] = {write_fd, POLLOUT, 0};
        }
        if (read_open) {
            ridx = static_cast<int>(nfds);
            fds[nfds++] = {read_fd, POLLIN, 0};
        }
        const int pr = ::poll(fds, nfds, remaining_ms(deadline));
        if (pr < 0) {
            if (errno == EINTR) continue;
            close_fd(write_fd);
            close_fd(read_fd);
            kill_and_reap(pid);
            throw_model_error(ModelError::Kind::spawn_failure, cmd, x,
                              std::string("poll failed: ") + std::strerror(errno));
        }
        if (pr == 0) {
            timed_out = true;
            break;
        }
        if (widx >= 0 && (fds[widx].revents & (POLLOUT | POLLERR | POLLHUP)) != 0) {
            const ssize_t n =
                ::write(write_fd, input.data() + written, input.size() - written);
            if (n > 0) {
                written += static_cast<std::size_t>(n);
            } else if (n < 0 && errno != EAGAIN && errno != EINTR) {
                written = input.size();  // EPIPE: child no longer reading
            }
            if (written == input.size()) {
                close_fd(write_fd);
                write_open = false;
            }
        }
        if (ridx >= 0 && (fds[ridx].revents & (POLLIN | POLLERR | POLLHUP)) != 0) {
            char buf[4096];
            const ssize_t n = ::read(read_fd, buf, sizeof buf);
            if (n > 0) {
                output_text.append(buf, static_cast<std::size_t>(n));
            } else if (n == 0 || (n < 0 && errno != EAGAIN && errno != EINTR)) {
                close_fd(read_fd);
                read_open = false;
            }
        }
    }
    close_fd(write_fd);
    close_fd(read_fd);

    if (timed_out) {
        kill_and_reap(pid);
        throw_model_error(ModelError::Kind::timeout, cmd, x,
                          "timed out after " + numfmt::shortest(*cmd.timeout_sec) + " s");
    }

    int status = 0;
    for (;;) {
        pid_t r = ::waitpid(pid, &status, deadline ? WNOHANG : 0);
        if (r == pid) break;
        if (r < 0 && errno != EINTR) {
            throw_model_error(ModelError::Kind::spawn_failure, cmd, x,
                              std::string("waitpid failed: ") + std::strerror(errno));
        }
        if (r == 0) {
            if (Clock::now() >= *deadline) {
                kill_and_reap(pid);
                throw_model_error(ModelError::Kind::timeout, cmd, x,
                                  "timed out after " + numfmt::shortest(*cmd.timeout_sec) + " s");
            }
            ::usleep(1000);
        }
    }

    if (WIFSIGNALED(status)) {
        const int sig = WTERMSIG(status);
        throw_model_error(ModelError::Kind::nonzero_exit, cmd, x,
                          std::string("killed by signal ") + std::to_string(sig), 128 + sig);
    }
    const int exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    if (exit_code != 0) {
        throw_model_error(ModelError::Kind::nonzero_exit, cmd, x,
                          "exited with status " + std::to_string(exit_code), exit_code);
    }

    // Scalar = first whitespace token of the last nonempty stdout line.
    std::string last_line;
    std::size_t pos = 0;
    while (pos < output_text.size()) {
        std::size_t eol = output_text.find('\n', pos);
        if (eol == std::string::npos) eol = output_text.size();
        std::string_view line(output_text.data() + pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (line.find_first_not_of(" \t") != std::string_view::npos)
            last_line.assign(line);
        pos = eol + 1;
    }
    if (last_line.empty()) {
        throw_model_error(ModelError::Kind::parse_failure, cmd, x,
                          "no output to parse");
    }
    std::istringstream tokens(last_line);
    std::string token;
    tokens >> token;
    double value = 0.0;
    if (!numfmt::try_parse(token, value)) {
        throw_model_error(ModelError::Kind::parse_failure, cmd, x,
                          "cannot parse `" + token + "` as a number");
    }
    if (!std::isfinite(value)) {
        throw_model_error(ModelError::Kind::non_finite, cmd, x,
                          "returned non-finite value " + token);
    }

    EvaluationRecord rec;
    rec.point.assign(x.begin(), x.end());
    rec.output = value;
    rec.wall_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    rec.exit_status = 0;
    return rec;
}

double run_model(const ModelCommand& cmd, std::span<const double> x) {
    return run_model_record(cmd, x).output;
}

ModelFn subprocess_model(ModelCommand cmd) {
    return [cmd = std::move(cmd)](std::span<const double> x) { return run_model(cmd, x); };
}

namespace {

std::string expected_header(const InputDomain& d) {
    std::string h;
    for (std::size_t i = 0; i < d.dimension(); ++i) {
        h += d.parameter_name(i);
        h += ',';
    }
    h += 'f';
    return h;
}

std::string generic_header(std::size_t m) {
    std::string h;
    for (std::size_t i = 0; i < m; ++i) {
        h += 'x';
        h += std::to_string(i + 1);
        h += ',';
    }
    h += 'f';
    return h;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        const std::size_t comma = line.find(',', pos);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, comma - pos));
        pos = comma + 1;
    }
}

}  // namespace

SampleSet ingest_csv(const std::filesystem::path& path, const InputDomain& d) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open " + path.string());
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());

    const std::size_t m = d.dimension();
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string::npos) eol = text.size();
        std::string_view line(text.data() + pos, eol - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = eol + 1;
    }
    while (!lines.empty() && lines.back().empty()) lines.pop_back();

    if (lines.empty()) throw SchemaError(path.string() + ": empty file");
    const std::string named = expected_header(d);
    const std::string generic = generic_header(m);
    if (lines[0] != named && lines[0] != generic) {
        throw SchemaError(path.string() + ": header `" + std::string(lines[0]) +
                          "` does not match `" + named + "`");
    }
    const std::size_t n = lines.size() - 1;
    if (n == 0) throw SchemaError(path.string() + ": no sample rows");

    Matrix physical(n, m);
    std::vector<double> outputs(n);
    std::vector<double> row(m + 1);
    for (std::size_t j = 0; j < n; ++j) {
        const auto fields = split_fields(lines[j + 1]);
        const std::size_t file_line = j + 2;
        if (fields.size() != m + 1) {
            throw SchemaError(path.string() + ":" + std::to_string(file_line) + ": expected " +
                              std::to_string(m + 1) + " fields, found " +
                              std::to_string(fields.size()));
        }
        for (std::size_t i = 0; i <= m; ++i) {
            if (!numfmt::try_parse(fields[i], row[i])) {
                throw SchemaError(path.string() + ":" + std::to_string(file_line) +
                                  ": cannot parse `" + std::string(fields[i]) + "` as a number");
            }
        }
        for (std::size_t i = 0; i < m; ++i) physical(j, i) = row[i];
        if (!std::isfinite(row[m])) {
            throw EvaluationError(path.string() + ":" + std::to_string(file_line) +
                                      ": non-finite output `" + std::string(fields[m]) + "`",
                                  j, {row.begin(), row.begin() + static_cast<std::ptrdiff_t>(m)});
        }
        outputs[j] = row[m];
    }

    Matrix xhat(n, m);
    for (std::size_t i = 0; i < m; ++i) {
        try {
            d.to_normalized_column(i, physical.column(i), xhat.column(i));
        } catch (const OutOfBoundsError& e) {
            const std::size_t file_line = e.row == OutOfBoundsError::no_row ? 0 : e.row + 2;
            throw OutOfBoundsError(path.string() + ":" + std::to_string(file_line) + ": " +
                                       e.what(),
                                   e.row);
        }
    }

    SampleSet s{d, std::move(xhat), std::move(physical), std::move(outputs), std::nullopt};
    return s;
}

void persist_csv(const SampleSet& s, const std::filesystem::path& path) {
    const std::size_t n = s.size();
    const std::size_t m = s.domain.dimension();
    std::string text = expected_header(s.domain);
    text += '\n';
    for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t i = 0; i < m; ++i) {
            text += numfmt::shortest(s.physical(j, i));
            text += ',';
        }
        text += numfmt::shortest(s.outputs[j]);
        text += '\n';
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out) throw IoError("write failed for " + path.string());
}

}  // namespace ascheck
