#include "coinweigh/adaptive.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "coinweigh/constructors.hpp"

namespace coinweigh {

AdaptiveTree::AdaptiveTree(VariantId variant, int n, int k) : variant_(variant), n_(n), k_(k)
{
	if (n < 1 || k < 0)
	{
		throw std::invalid_argument("AdaptiveTree needs n >= 1 and k >= 0");
	}
}

int AdaptiveTree::add_leaf(std::optional<Answer> answer)
{
	Node node;
	node.leaf = true;
	node.answer = answer;
	nodes_.push_back(std::move(node));
	return static_cast<int>(nodes_.size()) - 1;
}

int AdaptiveTree::add_weighing(Pans weighing, std::array<int, 3> children)
{
	Node node;
	node.weighing = std::move(weighing);
	node.children = children;
	nodes_.push_back(std::move(node));
	return static_cast<int>(nodes_.size()) - 1;
}

int AdaptiveTree::root(Sign known) const
{
	const bool per_comparison = variant_info(variant_).weight_known;
	const int r = roots_[per_comparison && known == Sign::lighter ? 1 : 0];
	if (r < 0)
	{
		throw std::logic_error("adaptive tree has no root");
	}
	return r;
}

void AdaptiveTree::set_root(int id, Sign known)
{
	if (variant_info(variant_).weight_known)
	{
		roots_[known == Sign::lighter ? 1 : 0] = id;
	}
	else
	{
		roots_ = {id, id};
	}
}

int AdaptiveTree::child_index(Tilt t)
{
	switch (t)
	{
	case Tilt::left: return 0;
	case Tilt::balanced: return 1;
	case Tilt::right: return 2;
	}
	return 1;
}

namespace {

constexpr std::array<Tilt, 3> readings{Tilt::left, Tilt::balanced, Tilt::right};

Tilt reading_for(const Pans& pans, const Configuration& c)
{
	if (c.culprit == 0)
	{
		return Tilt::balanced;
	}
	const auto on = [&](const std::vector<int>& pan) {
		return std::find(pan.begin(), pan.end(), c.culprit) != pan.end();
	};
	const bool heavy = c.sign == Sign::heavier;
	if (on(pans.left))
	{
		return heavy ? Tilt::left : Tilt::right;
	}
	if (on(pans.right))
	{
		return heavy ? Tilt::right : Tilt::left;
	}
	return Tilt::balanced;
}

// Tree that performs a fixed list of weighings and then asks `leaf` for the
// answer to the readings collected.
int add_static_subtree(AdaptiveTree& tree, const std::vector<Pans>& trials,
                       const std::function<std::optional<Answer>(const Outcome&)>& leaf, Outcome& prefix)
{
	const auto level = static_cast<std::size_t>(prefix.size());
	if (level == trials.size())
	{
		return tree.add_leaf(leaf(prefix));
	}
	std::array<int, 3> children{};
	for (auto t : readings)
	{
		prefix.symbols.push_back(t);
		children[static_cast<std::size_t>(AdaptiveTree::child_index(t))] =
		    add_static_subtree(tree, trials, leaf, prefix);
		prefix.symbols.pop_back();
	}
	return tree.add_weighing(trials[level], children);
}

int add_static_subtree(AdaptiveTree& tree, const std::vector<Pans>& trials,
                       const std::function<std::optional<Answer>(const Outcome&)>& leaf)
{
	Outcome prefix;
	return add_static_subtree(tree, trials, leaf, prefix);
}

// P2 scheme on `coins` for `depth` trials, answers carrying the known sign.
int add_p2_subtree(AdaptiveTree& tree, const std::vector<int>& coins, int depth, Sign known)
{
	const auto vectors = construct_p2(static_cast<int>(coins.size()), depth);
	std::vector<Pans> trials(static_cast<std::size_t>(depth));
	for (int j = 0; j < depth; ++j)
	{
		for (std::size_t i = 0; i < coins.size(); ++i)
		{
			const int e = vectors[i][j];
			if (e < 0)
			{
				trials[static_cast<std::size_t>(j)].left.push_back(coins[i]);
			}
			else if (e > 0)
			{
				trials[static_cast<std::size_t>(j)].right.push_back(coins[i]);
			}
		}
	}
	const int direction = known == Sign::heavier ? 1 : -1;
	return add_static_subtree(tree, trials, [&](const Outcome& o) -> std::optional<Answer> {
		for (std::size_t i = 0; i < coins.size(); ++i)
		{
			bool match = true;
			for (int j = 0; j < depth && match; ++j)
			{
				const auto t = o.symbols[static_cast<std::size_t>(j)];
				const int seen = t == Tilt::left ? -1 : t == Tilt::right ? 1 : 0;
				match = vectors[i][j] * direction == seen;
			}
			if (match)
			{
				return Answer{coins[i], known};
			}
		}
		return std::nullopt;
	});
}

int add_p4_subtree(AdaptiveTree& tree, const std::vector<int>& suspects, std::vector<int> genuine, int k, Sign known)
{
	const auto third = static_cast<std::size_t>(pow3(k - 1));
	const std::vector<int> left(suspects.begin(), suspects.begin() + static_cast<std::ptrdiff_t>(third));
	const std::vector<int> right(suspects.begin() + static_cast<std::ptrdiff_t>(third),
	                             suspects.begin() + static_cast<std::ptrdiff_t>(2 * third));
	const std::vector<int> rest(suspects.begin() + static_cast<std::ptrdiff_t>(2 * third), suspects.end());

	// Left pan sinks: a heavy coin on the left, or a light coin on the right.
	const auto& sinks_left = known == Sign::heavier ? left : right;
	const auto& sinks_right = known == Sign::heavier ? right : left;
	const int on_l = add_p2_subtree(tree, sinks_left, k - 1, known);
	const int on_r = add_p2_subtree(tree, sinks_right, k - 1, known);

	genuine.insert(genuine.end(), left.begin(), left.end());
	genuine.insert(genuine.end(), right.begin(), right.end());
	std::sort(genuine.begin(), genuine.end());

	int on_b;
	if (k == 2)
	{
		// One coin left: weigh it against a coin known to be genuine.
		const int last = rest.front();
		const int heavy_reading = tree.add_leaf(known == Sign::heavier ? std::optional(Answer{last, known}) : std::nullopt);
		const int light_reading = tree.add_leaf(known == Sign::lighter ? std::optional(Answer{last, known}) : std::nullopt);
		const int none = tree.add_leaf(Answer{0, Sign::none});
		on_b = tree.add_weighing(Pans{{last}, {genuine.front()}}, {heavy_reading, none, light_reading});
	}
	else
	{
		on_b = add_p4_subtree(tree, rest, genuine, k - 1, known);
	}
	return tree.add_weighing(Pans{left, right}, {on_l, on_b, on_r});
}

std::string join_ids(const std::vector<int>& ids)
{
	std::string out;
	for (std::size_t i = 0; i < ids.size(); ++i)
	{
		out += (i ? " " : "") + std::to_string(ids[i]);
	}
	return out;
}

void format_node(const AdaptiveTree& t, int id, int depth, std::ostringstream& out)
{
	const auto& node = t.node(id);
	if (node.leaf)
	{
		if (!node.answer)
		{
			out << "impossible\n";
		}
		else if (node.answer->culprit == 0)
		{
			out << "answer none\n";
		}
		else
		{
			out << "answer " << node.answer->culprit << ' ' << to_string(node.answer->sign) << '\n';
		}
		return;
	}
	out << "weigh " << join_ids(node.weighing.left) << " | " << join_ids(node.weighing.right) << '\n';
	for (auto r : readings)
	{
		out << std::string(static_cast<std::size_t>(2 * (depth + 1)), ' ') << static_cast<char>(r) << ": ";
		format_node(t, node.children[static_cast<std::size_t>(AdaptiveTree::child_index(r))], depth + 1, out);
	}
}

} // namespace

AdaptiveTree build_adaptive_p4(VariantId variant, int n, int k)
{
	if (variant != VariantId::P3 && variant != VariantId::P4)
	{
		throw std::invalid_argument("build_adaptive_p4 serves P3 and P4 only");
	}
	if (k < 2 || static_cast<std::uint64_t>(n) != pow3(k) - 2)
	{
		throw std::invalid_argument("build_adaptive_p4 needs n = 3^k - 2 with k >= 2");
	}
	AdaptiveTree tree(variant, n, k);
	std::vector<int> coins(static_cast<std::size_t>(n));
	for (int i = 0; i < n; ++i)
	{
		coins[static_cast<std::size_t>(i)] = i + 1;
	}
	for (auto known : {Sign::heavier, Sign::lighter})
	{
		tree.set_root(add_p4_subtree(tree, coins, {}, k, known), known);
	}
	return tree;
}

AdaptiveTree tree_from_scheme(const Scheme& s)
{
	AdaptiveTree tree(s.variant(), s.n(), s.k());
	std::vector<Pans> trials;
	for (int j = 1; j <= s.k(); ++j)
	{
		trials.push_back(trial_pans(s, j));
	}
	const Decoder decoder(s);
	const bool per_comparison = variant_info(s.variant()).weight_known;
	for (auto known : {Sign::heavier, Sign::lighter})
	{
		const int root = add_static_subtree(tree, trials, [&](const Outcome& o) -> std::optional<Answer> {
			try
			{
				return decoder.decode(o, known);
			}
			catch (const DecodeError&)
			{
				return std::nullopt;
			}
		});
		tree.set_root(root, known);
		if (!per_comparison)
		{
			break;
		}
	}
	return tree;
}

Answer simulate_adaptive(const AdaptiveTree& t, const Configuration& c)
{
	validate_configuration(t.variant(), t.n(), c);
	int id = t.root(c.sign == Sign::lighter ? Sign::lighter : Sign::heavier);
	for (int depth = 0;; ++depth)
	{
		const auto& node = t.node(id);
		if (node.leaf)
		{
			if (!node.answer)
			{
				throw std::runtime_error("configuration " + to_string(c) + " reached a contradictory leaf");
			}
			return *node.answer;
		}
		if (depth == t.k())
		{
			throw std::runtime_error("adaptive tree deeper than k=" + std::to_string(t.k()));
		}
		const int next = node.children[static_cast<std::size_t>(AdaptiveTree::child_index(reading_for(node.weighing, c)))];
		if (next < 0)
		{
			throw std::runtime_error("adaptive tree node without a child");
		}
		id = next;
	}
}

VerificationReport verify_exhaustive(const AdaptiveTree& t)
{
	VerificationReport report;
	const auto info = variant_info(t.variant());

	// Every weighing must put the same number of coins on each pan.
	for (std::size_t id = 0; id < t.size(); ++id)
	{
		const auto& node = t.node(static_cast<int>(id));
		if (!node.leaf && node.weighing.left.size() != node.weighing.right.size())
		{
			auto coins = node.weighing.left;
			coins.insert(coins.end(), node.weighing.right.begin(), node.weighing.right.end());
			report.condition_failures.push_back({Condition::balanced, coins, {}});
		}
	}

	for (const auto& c : admissible_configurations(t.variant(), t.n()))
	{
		++report.configurations_checked;
		std::vector<Configuration> walks{c};
		if (c.culprit == 0 && info.weight_known)
		{
			// Walk the lighter-comparison root as well.
			walks.push_back(Configuration{0, Sign::none});
		}
		for (std::size_t w = 0; w < walks.size(); ++w)
		{
			std::string got;
			bool ok = false;
			try
			{
				Answer a;
				if (w == 0)
				{
					a = simulate_adaptive(t, c);
				}
				else
				{
					// Same walk from the other root: the culprit-free path only sees balances.
					int id = t.root(Sign::lighter);
					while (!t.node(id).leaf)
					{
						id = t.node(id).children[1];
					}
					if (!t.node(id).answer)
					{
						throw std::runtime_error("no-counterfeit path ends in a contradictory leaf");
					}
					a = *t.node(id).answer;
				}
				got = to_string(a);
				ok = a.culprit == c.culprit && (a.sign == c.sign || (a.sign == Sign::unknown && !info.sign_required));
				if (ok && a.sign == Sign::unknown && a.sign != c.sign)
				{
					++report.unknown_sign_answers;
				}
			}
			catch (const std::runtime_error& e)
			{
				got = std::string("error: ") + e.what();
			}
			if (!ok)
			{
				report.decode_failures.push_back({c, to_string(Answer{c.culprit, c.sign}), got});
			}
		}
	}
	report.passed = report.condition_failures.empty() && report.decode_failures.empty();
	return report;
}

std::string format_tree(const AdaptiveTree& t)
{
	std::ostringstream out;
	out << "tree variant=" << to_string(t.variant()) << " n=" << t.n() << " k=" << t.k() << '\n';
	if (variant_info(t.variant()).weight_known)
	{
		for (auto known : {Sign::heavier, Sign::lighter})
		{
			out << "known=" << to_string(known) << '\n';
			format_node(t, t.root(known), 0, out);
		}
	}
	else
	{
		format_node(t, t.root(), 0, out);
	}
	return out.str();
}

AdaptiveSession::AdaptiveSession(const AdaptiveTree& tree, Sign known) : tree_(&tree), node_(tree.root(known)) {}

bool AdaptiveSession::finished() const
{
	return tree_->node(node_).leaf;
}

const Pans& AdaptiveSession::current_weighing() const
{
	if (finished())
	{
		throw std::logic_error("session already finished");
	}
	return tree_->node(node_).weighing;
}

void AdaptiveSession::feed(Tilt reading)
{
	if (finished())
	{
		throw std::logic_error("session already finished");
	}
	const int next = tree_->node(node_).children[static_cast<std::size_t>(AdaptiveTree::child_index(reading))];
	++round_;
	const auto& child = tree_->node(next);
	if (child.leaf && !child.answer)
	{
		throw std::runtime_error("reading '" + std::string(1, static_cast<char>(reading)) + "' in trial " +
		                         std::to_string(round_) + " contradicts the earlier readings");
	}
	node_ = next;
}

const Answer& AdaptiveSession::answer() const
{
	if (!finished())
	{
		throw std::logic_error("session not finished");
	}
	return *tree_->node(node_).answer;
}

} // namespace coinweigh
