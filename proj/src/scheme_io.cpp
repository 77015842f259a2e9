#include "coinweigh/scheme_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace coinweigh {

namespace {

std::vector<std::string_view> split_lines(std::string_view text)
{
	std::vector<std::string_view> lines;
	std::size_t start = 0;
	while (start < text.size())
	{
		auto end = text.find('\n', start);
		if (end == std::string_view::npos)
		{
			lines.push_back(text.substr(start));
			break;
		}
		lines.push_back(text.substr(start, end - start));
		start = end + 1;
	}
	return lines;
}

int parse_int_field(std::string_view token, std::string_view key, int line)
{
	if (token.substr(0, key.size()) != key)
	{
		throw ParseError(line, "expected '" + std::string(key) + "<int>', got '" + std::string(token) + "'");
	}
	auto digits = token.substr(key.size());
	int value = 0;
	auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
	if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty() || value < 0)
	{
		throw ParseError(line, "bad integer in '" + std::string(token) + "'");
	}
	return value;
}

TernaryVector parse_vector_line(std::string_view text, int k, int line)
{
	if (static_cast<int>(text.size()) != k)
	{
		throw ParseError(line, "expected " + std::to_string(k) + " symbols, got '" + std::string(text) + "'");
	}
	if (k == 0)
	{
		return TernaryVector::zeros(0);
	}
	try
	{
		return parse_lnr(text);
	}
	catch (const std::invalid_argument& e)
	{
		throw ParseError(line, e.what());
	}
}

} // namespace

std::string format_scheme(const Scheme& s)
{
	std::ostringstream out;
	out << "variant=" << to_string(s.variant()) << " n=" << s.n() << " k=" << s.k() << " genuine=";
	if (s.genuine())
	{
		out << s.genuine_id();
	}
	else
	{
		out << "none";
	}
	out << '\n';
	for (const auto& v : s.coins())
	{
		out << format_lnr(v) << '\n';
	}
	if (s.genuine())
	{
		out << format_lnr(*s.genuine()) << '\n';
	}
	return out.str();
}

Scheme parse_scheme(std::string_view text)
{
	const auto lines = split_lines(text);
	if (lines.empty())
	{
		throw ParseError(1, "empty scheme");
	}

	std::vector<std::string_view> tokens;
	{
		std::string_view header = lines[0];
		std::size_t start = 0;
		while (start <= header.size())
		{
			auto end = header.find(' ', start);
			if (end == std::string_view::npos)
			{
				end = header.size();
			}
			tokens.push_back(header.substr(start, end - start));
			start = end + 1;
		}
	}
	if (tokens.size() != 4)
	{
		throw ParseError(1, "header must be 'variant=<P1..P12> n=<int> k=<int> genuine=<index|none>'");
	}
	if (tokens[0].substr(0, 8) != "variant=")
	{
		throw ParseError(1, "expected 'variant=' field");
	}
	VariantId variant;
	try
	{
		variant = parse_variant(tokens[0].substr(8));
	}
	catch (const std::invalid_argument& e)
	{
		throw ParseError(1, e.what());
	}
	const int n = parse_int_field(tokens[1], "n=", 1);
	const int k = parse_int_field(tokens[2], "k=", 1);
	if (k > 39)
	{
		throw ParseError(1, "k too large");
	}
	if (tokens[3].substr(0, 8) != "genuine=")
	{
		throw ParseError(1, "expected 'genuine=' field");
	}
	const bool has_genuine = tokens[3] != "genuine=none";
	if (has_genuine && parse_int_field(tokens[3], "genuine=", 1) != n + 1)
	{
		throw ParseError(1, "genuine coin must have id n+1 = " + std::to_string(n + 1));
	}
	if (has_genuine != variant_info(variant).extra_coin)
	{
		throw ParseError(1, to_string(variant) + (has_genuine ? " has no genuine coin" : " requires a genuine coin"));
	}

	const std::size_t expected = static_cast<std::size_t>(n) + (has_genuine ? 1 : 0);
	if (lines.size() - 1 != expected)
	{
		throw ParseError(static_cast<int>(lines.size()),
		                 "expected " + std::to_string(expected) + " vector lines, found " +
		                     std::to_string(lines.size() - 1));
	}
	std::vector<TernaryVector> coins;
	coins.reserve(static_cast<std::size_t>(n));
	for (int i = 1; i <= n; ++i)
	{
		coins.push_back(parse_vector_line(lines[static_cast<std::size_t>(i)], k, i + 1));
	}
	std::optional<TernaryVector> genuine;
	if (has_genuine)
	{
		genuine = parse_vector_line(lines[static_cast<std::size_t>(n) + 1], k, n + 2);
	}
	return Scheme(variant, k, std::move(coins), std::move(genuine));
}

Scheme read_scheme_file(const std::filesystem::path& path)
{
	std::ifstream in(path, std::ios::binary);
	if (!in)
	{
		throw std::runtime_error("cannot open " + path.string());
	}
	std::ostringstream buffer;
	buffer << in.rdbuf();
	return parse_scheme(buffer.str());
}

void write_scheme_file(const std::filesystem::path& path, const Scheme& s)
{
	std::ofstream out(path, std::ios::binary);
	if (!out)
	{
		throw std::runtime_error("cannot write " + path.string());
	}
	out << format_scheme(s);
}

} // namespace coinweigh
