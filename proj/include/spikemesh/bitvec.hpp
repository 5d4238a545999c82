/*
 * Copyright 2026 The spikemesh authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef SPIKEMESH_BITVEC_HPP
#define SPIKEMESH_BITVEC_HPP

#include <bit>
#include <cassert>
#include <cstdint>
#include <vector>

namespace spikemesh
{

// Fixed-size bit vector used for spike register arrays.
class BitVec
{
public:
    BitVec() = default;
    explicit BitVec(int n)
            : n_(n)
            , words_((std::size_t(n) + 63) / 64, 0)
    {
    }

    int size() const { return n_; }

    void set(int i)
    {
        assert(i >= 0 && i < n_);
        words_[std::size_t(i) >> 6] |= std::uint64_t(1) << (i & 63);
    }

    bool test(int i) const
    {
        assert(i >= 0 && i < n_);
        return (words_[std::size_t(i) >> 6] >> (i & 63)) & 1u;
    }

    void clear_all()
    {
        for (auto &w : words_)
        {
            w = 0;
        }
    }

    int popcount() const
    {
        int c = 0;
        for (auto w : words_)
        {
            c += std::popcount(w);
        }
        return c;
    }

    bool any() const
    {
        for (auto w : words_)
        {
            if (w != 0)
            {
                return true;
            }
        }
        return false;
    }

    // Visits set bit indices in ascending order.
    template <typename Fn>
    void for_each_set(Fn &&fn) const
    {
        for (std::size_t wi = 0; wi < words_.size(); ++wi)
        {
            std::uint64_t w = words_[wi];
            while (w != 0)
            {
                const int b = std::countr_zero(w);
                fn(int(wi * 64) + b);
                w &= w - 1;
            }
        }
    }

    void swap(BitVec &other)
    {
        words_.swap(other.words_);
        std::swap(n_, other.n_);
    }

    bool operator==(const BitVec &) const = default;

private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace spikemesh

#endif // SPIKEMESH_BITVEC_HPP
