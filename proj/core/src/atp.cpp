#include "fragsat/atp.hpp"

#include <fcntl.h>
#include <poll.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cerrno>
#include <chrono>
#include <cmath>
#include <condition_variable>
#include <csignal>
#include <cstring>
#include <mutex>
#include <sstream>

#include "fragsat/errors.hpp"

namespace fragsat {

namespace {

constexpr size_t kMaxProverOutput = 16 * 1024 * 1024;

std::mutex g_sem_mu;
std::condition_variable g_sem_cv;
int g_sem_limit = 8;
int g_sem_active = 0;

struct SemGuard {
	SemGuard() {
		std::unique_lock lk(g_sem_mu);
		g_sem_cv.wait(lk, [] { return g_sem_active < g_sem_limit; });
		++g_sem_active;
	}
	~SemGuard() {
		{
			std::lock_guard lk(g_sem_mu);
			--g_sem_active;
		}
		g_sem_cv.notify_one();
	}
};

std::string replace_all(std::string s, std::string_view what, std::string_view with) {
	size_t pos = 0;
	while ((pos = s.find(what, pos)) != std::string::npos) {
		s.replace(pos, what.size(), with);
		pos += with.size();
	}
	return s;
}

bool executable(const std::string &path) { return ::access(path.c_str(), X_OK) == 0; }

std::string self_dir() {
	char buf[4096];
	ssize_t n = ::readlink("/proc/self/exe", buf, sizeof buf - 1);
	if (n <= 0) return {};
	buf[n] = '\0';
	std::string path(buf);
	size_t slash = path.rfind('/');
	return slash == std::string::npos ? std::string{} : path.substr(0, slash);
}

} // namespace

void set_max_concurrent_provers(int n) {
	{
		std::lock_guard lk(g_sem_mu);
		g_sem_limit = std::max(1, n);
	}
	g_sem_cv.notify_all();
}

ProverConfig prover_config_from_template(std::string_view tmpl, double timeout_seconds) {
	ProverConfig cfg;
	cfg.timeout_seconds = timeout_seconds;
	std::istringstream in{std::string(tmpl)};
	std::string word;
	while (in >> word) cfg.command.push_back(word);
	if (cfg.command.empty()) throw ParseError("empty prover command template");
	int file_slots = 0;
	for (const auto &arg : cfg.command)
		if (arg.find("{file}") != std::string::npos) ++file_slots;
	if (file_slots > 1) throw ParseError("prover template mentions {file} more than once");
	if (file_slots == 0) cfg.command.push_back("{file}");
	return cfg;
}

std::optional<ProverConfig> find_prover(double timeout_seconds) {
	if (const char *env = std::getenv("FRAGSAT_PROVER"); env != nullptr && *env != '\0')
		return prover_config_from_template(env, timeout_seconds);
	auto bundled = [&](const std::string &path) {
		ProverConfig cfg;
		cfg.timeout_seconds = timeout_seconds;
		cfg.command = {path, "--timeout", "{timeout}", "{file}"};
		return cfg;
	};
	if (std::string dir = self_dir(); !dir.empty() && executable(dir + "/fragprove"))
		return bundled(dir + "/fragprove");
	if (const char *path_env = std::getenv("PATH")) {
		std::string_view rest(path_env);
		while (!rest.empty()) {
			size_t colon = rest.find(':');
			std::string dir(rest.substr(0, colon));
			rest = colon == std::string_view::npos ? std::string_view{} : rest.substr(colon + 1);
			if (!dir.empty() && executable(dir + "/fragprove")) return bundled(dir + "/fragprove");
		}
	}
	return std::nullopt;
}

std::string_view szs_name(Szs s) {
	switch (s) {
	case Szs::Satisfiable: return "Satisfiable";
	case Szs::Unsatisfiable: return "Unsatisfiable";
	case Szs::Timeout: return "Timeout";
	case Szs::Error: return "Error";
	}
	return "Error";
}

namespace {

std::optional<std::string> szs_status_word(const std::string &raw) {
	std::istringstream in(raw);
	std::string line;
	while (std::getline(in, line)) {
		size_t at = line.find("SZS status");
		if (at == std::string::npos) continue;
		std::istringstream rest(line.substr(at + std::strlen("SZS status")));
		std::string word;
		if (rest >> word) return word;
	}
	return std::nullopt;
}

Szs classify_szs(const std::string &word) {
	if (word == "Unsatisfiable" || word == "Theorem" || word == "ContradictoryAxioms")
		return Szs::Unsatisfiable;
	if (word == "Satisfiable" || word == "CounterSatisfiable") return Szs::Satisfiable;
	if (word == "Timeout" || word == "ResourceOut" || word == "GaveUp" || word == "Unknown")
		return Szs::Timeout;
	return Szs::Error;
}

} // namespace

ProverResult run_prover(const std::string &tptp, const ProverConfig &cfg) {
	if (cfg.command.empty()) throw ProverUnavailable("prover command is empty");
	SemGuard guard;

	char tmp_path[] = "/tmp/fragsatXXXXXX.p";
	int tmp_fd = ::mkstemps(tmp_path, 2);
	if (tmp_fd < 0) throw IoError(std::string("mkstemps: ") + std::strerror(errno));
	struct TmpFile {
		const char *path;
		~TmpFile() { ::unlink(path); }
	} tmp_cleanup{tmp_path};
	for (size_t off = 0; off < tptp.size();) {
		ssize_t n = ::write(tmp_fd, tptp.data() + off, tptp.size() - off);
		if (n < 0) {
			::close(tmp_fd);
			throw IoError(std::string("write problem file: ") + std::strerror(errno));
		}
		off += static_cast<size_t>(n);
	}
	::close(tmp_fd);

	int timeout_arg = std::max(1, static_cast<int>(std::ceil(cfg.timeout_seconds)));
	std::vector<std::string> argv_s;
	argv_s.reserve(cfg.command.size());
	for (const auto &arg : cfg.command) {
		std::string a = replace_all(arg, "{file}", tmp_path);
		argv_s.push_back(replace_all(std::move(a), "{timeout}", std::to_string(timeout_arg)));
	}
	std::vector<char *> argv;
	argv.reserve(argv_s.size() + 1);
	for (auto &a : argv_s) argv.push_back(a.data());
	argv.push_back(nullptr);

	int pipe_fd[2];
	if (::pipe(pipe_fd) != 0) throw IoError(std::string("pipe: ") + std::strerror(errno));
	pid_t pid = ::fork();
	if (pid < 0) {
		::close(pipe_fd[0]);
		::close(pipe_fd[1]);
		throw ProverUnavailable(std::string("fork: ") + std::strerror(errno));
	}
	if (pid == 0) {
		::dup2(pipe_fd[1], STDOUT_FILENO);
		::dup2(pipe_fd[1], STDERR_FILENO);
		::close(pipe_fd[0]);
		::close(pipe_fd[1]);
		::execvp(argv[0], argv.data());
		::_exit(127);
	}
	::close(pipe_fd[1]);

	std::string raw;
	bool killed = false;
	auto deadline = std::chrono::steady_clock::now() +
	                std::chrono::milliseconds(static_cast<long>((cfg.timeout_seconds + 2.0) * 1000));
	for (;;) {
		auto now = std::chrono::steady_clock::now();
		if (!killed && now >= deadline) {
			::kill(pid, SIGKILL);
			killed = true;
		}
		int wait_ms = killed ? 100
		                     : static_cast<int>(std::min<long>(
		                           100, std::chrono::duration_cast<std::chrono::milliseconds>(
		                                    deadline - now)
		                                    .count() +
		                                    1));
		struct pollfd pfd{pipe_fd[0], POLLIN, 0};
		int rc = ::poll(&pfd, 1, std::max(wait_ms, 1));
		if (rc < 0) {
			if (errno == EINTR) continue;
			break;
		}
		if (rc == 0) continue;
		char buf[4096];
		ssize_t n = ::read(pipe_fd[0], buf, sizeof buf);
		if (n < 0) {
			if (errno == EINTR) continue;
			break;
		}
		if (n == 0) break;
		if (raw.size() < kMaxProverOutput)
			raw.append(buf, buf + std::min<size_t>(static_cast<size_t>(n),
			                                       kMaxProverOutput - raw.size()));
		else if (!killed) {
			::kill(pid, SIGKILL);
			killed = true;
		}
	}
	::close(pipe_fd[0]);
	int wstatus = 0;
	while (::waitpid(pid, &wstatus, 0) < 0 && errno == EINTR) {}

	if (killed) return {Szs::Timeout, "Timeout", std::move(raw)};
	if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) == 127)
		throw ProverUnavailable("could not execute prover '" + argv_s[0] + "'");

	auto word = szs_status_word(raw);
	if (!word) {
		std::string detail = "prover produced no SZS status line";
		if (WIFSIGNALED(wstatus))
			detail += " (killed by signal " + std::to_string(WTERMSIG(wstatus)) + ")";
		else if (WIFEXITED(wstatus) && WEXITSTATUS(wstatus) != 0)
			detail += " (exit code " + std::to_string(WEXITSTATUS(wstatus)) + ")";
		throw UnparseableOutput(detail);
	}
	return {classify_szs(*word), *word, std::move(raw)};
}

// ------------------------------------------------------------ proof stats

namespace {

// Returns the refutation block between the SZS output markers, or the whole
// output when no start marker is present.
std::string refutation_block(const std::string &raw) {
	std::istringstream in(raw);
	std::string line, block;
	bool inside = false, seen_start = false;
	while (std::getline(in, line)) {
		if (line.find("SZS output start") != std::string::npos) {
			inside = true;
			seen_start = true;
			continue;
		}
		if (line.find("SZS output end") != std::string::npos) {
			inside = false;
			continue;
		}
		if (inside) block += line + "\n";
	}
	return seen_start ? block : raw;
}

int count_statements(const std::string &block) {
	std::istringstream in(block);
	std::string line;
	int n = 0;
	while (std::getline(in, line)) {
		size_t at = line.find_first_not_of(" \t");
		if (at == std::string::npos) continue;
		std::string_view rest = std::string_view(line).substr(at);
		if (rest.rfind("fof(", 0) == 0 || rest.rfind("cnf(", 0) == 0) ++n;
	}
	return n;
}

std::vector<std::string> file_axiom_names(const std::string &block) {
	std::vector<std::string> names;
	size_t pos = 0;
	while ((pos = block.find("file(", pos)) != std::string::npos) {
		size_t p = pos + 5;
		int depth = 1;
		bool quoted = false;
		std::string second;
		int comma_seen = 0;
		for (; p < block.size() && depth > 0; ++p) {
			char c = block[p];
			if (quoted) {
				if (c == '\'') quoted = false;
				continue;
			}
			if (c == '\'') {
				quoted = true;
			} else if (c == '(' || c == '[') {
				++depth;
			} else if (c == ')' || c == ']') {
				--depth;
				if (depth == 0) break;
			} else if (c == ',' && depth == 1) {
				++comma_seen;
			} else if (comma_seen == 1 && c != ' ' && c != '\t') {
				second += c;
			}
		}
		if (!second.empty() && std::find(names.begin(), names.end(), second) == names.end())
			names.push_back(second);
		pos = p;
	}
	return names;
}

} // namespace

std::vector<std::string> used_axiom_names(const std::string &raw) {
	return file_axiom_names(refutation_block(raw));
}

ProofStats proof_stats(const std::string &raw, int instance_size) {
	std::string block = refutation_block(raw);
	int l = count_statements(block);
	if (l == 0) throw NoProofFound("output contains no refutation statements");
	int d = static_cast<int>(file_axiom_names(block).size());
	d = std::max(1, std::min({d, l, std::max(1, instance_size)}));
	return {l, d};
}

} // namespace fragsat
