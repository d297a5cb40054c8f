#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fragsat {

// Command template for an external prover; exactly one argv element must
// contain "{file}" (replaced by the problem path). "{timeout}" is replaced by
// ceil(timeout_seconds) where present.
struct ProverConfig {
	std::vector<std::string> command;
	double timeout_seconds = 10.0;
};

// Parse a whitespace-separated template like "vampire -t {timeout} {file}".
ProverConfig prover_config_from_template(std::string_view tmpl, double timeout_seconds = 10.0);

// Resolution order: FRAGSAT_PROVER env var, then a `fragprove` binary next to
// the running executable, then `fragprove` on PATH.
std::optional<ProverConfig> find_prover(double timeout_seconds = 10.0);

enum class Szs : uint8_t { Satisfiable, Unsatisfiable, Timeout, Error };

std::string_view szs_name(Szs s);

struct ProverResult {
	Szs status = Szs::Error;
	std::string status_word; // verbatim SZS value ("Unsatisfiable", "GaveUp", ...)
	std::string raw;         // full prover output (stdout + stderr)
};

// Write tptp to a private temp file, run cfg against it under a wall-clock
// timeout, parse the `SZS status` line. Throws ProverUnavailable (spawn
// failure) or UnparseableOutput (prover exited without an SZS line).
ProverResult run_prover(const std::string &tptp, const ProverConfig &cfg);

// Cap on concurrently running prover subprocesses (default 8).
void set_max_concurrent_provers(int n);

// l = numbered fof(/cnf( statements inside the SZS Refutation block (whole
// output if unmarked); d = distinct axiom names in file(...) annotations.
struct ProofStats {
	int l = 0;
	int d = 0;
};

// Throws NoProofFound when the output contains no refutation.
ProofStats proof_stats(const std::string &raw, int instance_size);

// Axiom names referenced by file(...) annotations in the refutation,
// deduplicated, in first-appearance order.
std::vector<std::string> used_axiom_names(const std::string &raw);

} // namespace fragsat
