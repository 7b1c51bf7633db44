/*
   Copyright 2026 The trignum Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "trignum/quadint.hpp"

namespace trignum {

std::string to_string(const QuadInt& q) {
    if (sgn(q.b()) == 0) return q.a().get_str();
    std::string s;
    if (sgn(q.a()) != 0) s = q.a().get_str() + (sgn(q.b()) > 0 ? "+" : "-");
    else if (sgn(q.b()) < 0) s = "-";
    Integer ab = abs(q.b());
    if (ab != 1) s += ab.get_str();
    return s + "phi";
}

std::ostream& operator<<(std::ostream& os, const QuadInt& q) { return os << to_string(q); }

}  // namespace trignum
