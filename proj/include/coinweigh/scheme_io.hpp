// Line-oriented text form of a scheme:
//
//   variant=P8 n=4 k=2 genuine=none
//   nl
//   lr
//   rn
//   nn
//
// One l/n/r string per coin in index order, then the genuine coin's vector
// (id n+1) when the variant has one. Every line ends with a single '\n'.

#ifndef COINWEIGH_SCHEME_IO_HPP
#define COINWEIGH_SCHEME_IO_HPP

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

#include "coinweigh/core.hpp"

namespace coinweigh {

class ParseError : public std::runtime_error
{
public:
	ParseError(int line, const std::string& message)
		: std::runtime_error("line " + std::to_string(line) + ": " + message), line_(line)
	{
	}
	int line() const { return line_; }

private:
	int line_;
};

std::string format_scheme(const Scheme& s);
Scheme parse_scheme(std::string_view text);

Scheme read_scheme_file(const std::filesystem::path& path);
void write_scheme_file(const std::filesystem::path& path, const Scheme& s);

} // namespace coinweigh

#endif
