#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace fragsat {

// Base for every error the library raises. `code()` is the stable,
// machine-readable identifier the CLI prints (`error: <code>: <message>`).
class Error : public std::runtime_error {
public:
	Error(std::string code, const std::string &msg)
	    : std::runtime_error(code + ": " + msg), code_(std::move(code)) {}
	const std::string &code() const { return code_; }

private:
	std::string code_;
};

#define FRAGSAT_DEFINE_ERROR(Name)                                            \
	class Name : public Error {                                           \
	public:                                                                \
		explicit Name(const std::string &msg) : Error(#Name, msg) {}   \
	}

FRAGSAT_DEFINE_ERROR(DuplicateEntry);
FRAGSAT_DEFINE_ERROR(ParseError);
FRAGSAT_DEFINE_ERROR(SplitTooSmall);
FRAGSAT_DEFINE_ERROR(UnknownWord);
FRAGSAT_DEFINE_ERROR(NotInFragment);
FRAGSAT_DEFINE_ERROR(WrongFragment);
FRAGSAT_DEFINE_ERROR(BudgetExceeded);
FRAGSAT_DEFINE_ERROR(ProverUnavailable);
FRAGSAT_DEFINE_ERROR(UnparseableOutput);
FRAGSAT_DEFINE_ERROR(NoProofFound);
FRAGSAT_DEFINE_ERROR(GenerationStuck);
FRAGSAT_DEFINE_ERROR(ConstructionStuck);
FRAGSAT_DEFINE_ERROR(VocabTooSmall);
FRAGSAT_DEFINE_ERROR(EmptyHardSet);
FRAGSAT_DEFINE_ERROR(SchemaError);
FRAGSAT_DEFINE_ERROR(IoError);

#undef FRAGSAT_DEFINE_ERROR

} // namespace fragsat
