#include "coinweigh/appendix.hpp"

namespace coinweigh {

const std::vector<BaseSet>& base_sets()
{
	static const std::vector<BaseSet> sets{
	    {VariantId::P8, 4, 2, {"nl", "lr", "rn", "nn"}},
	    {VariantId::P8, 13, 3,
	     {"llr", "lnr", "lrl", "lrr", "nll", "nln", "nnl", "nrl", "rln", "rnn", "rnr", "rrn", "nnn"}},
	    {VariantId::P7, 3, 2, {"nl", "lr", "rn"}},
	    {VariantId::P7, 3, 3, {"nln", "lrn", "rnn"}},
	    {VariantId::P7, 4, 3, {"lrn", "nln", "nrl", "rlr"}},
	    {VariantId::P7, 5, 3, {"lrl", "lrr", "nln", "rln", "rnn"}},
	    {VariantId::P7, 6, 3, {"lrn", "lrr", "nln", "nnl", "rlr", "rnl"}},
	    {VariantId::P7, 7, 3, {"lln", "lrl", "lrr", "nln", "rnl", "rnn", "rnr"}},
	    {VariantId::P7, 8, 3, {"lln", "lrn", "lrr", "nln", "nrl", "rlr", "rnl", "rnn"}},
	    {VariantId::P7, 9, 3, {"lln", "lrn", "lrr", "nln", "nnl", "nrl", "rlr", "rnl", "rnr"}},
	    {VariantId::P7, 10, 3, {"lln", "lrl", "lrn", "nln", "nlr", "nnl", "nrr", "rnl", "rnn", "rnr"}},
	    // The only base set containing an all-equal vector (lll).
	    {VariantId::P7, 11, 3, {"lll", "llr", "lrl", "lrr", "nln", "nrl", "nrr", "rln", "rnl", "rnn", "rnr"}},
	    {VariantId::P7, 12, 3, {"lln", "llr", "lrl", "lrr", "nln", "nnl", "nrl", "nrr", "rln", "rnl", "rnn", "rnr"}},
	};
	return sets;
}

std::optional<std::vector<TernaryVector>> base_set(VariantId variant, int n, int k)
{
	for (const auto& b : base_sets())
	{
		if (b.variant == variant && b.n == n && b.k == k)
		{
			std::vector<TernaryVector> out;
			out.reserve(b.vectors.size());
			for (const auto& s : b.vectors)
			{
				out.push_back(parse_lnr(s));
			}
			return out;
		}
	}
	return std::nullopt;
}

std::string base_set_filename(const BaseSet& b)
{
	return "S" + std::to_string(static_cast<int>(b.variant)) + "_" + std::to_string(b.n) + "_" +
	       std::to_string(b.k) + ".scheme";
}

} // namespace coinweigh
