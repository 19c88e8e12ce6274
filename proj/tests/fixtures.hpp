// Copyright 2026 The dagdepth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Shared text fixtures. The two figure digraphs, their decompositions, and
// the exact serialized form the builder produces for the first one.

#pragma once

namespace fixtures {

// Six vertices around a central 2-cycle C<->D; depth 2.
inline const char* kFig1Dg =
    "e A C\n"
    "e B C\n"
    "e C D\n"
    "e D C\n"
    "e E D\n"
    "e F D\n";

// What the builder emits for kFig1Dg, byte for byte: a root copy of C over
// copies of A, B, D and a root copy of D over copies of C, E, F.
inline const char* kFig1DecBuilt =
    "n 0 C\n"
    "n 1 A\n"
    "n 2 B\n"
    "n 3 D\n"
    "n 4 D\n"
    "n 5 C\n"
    "n 6 E\n"
    "n 7 F\n"
    "e 0 1\n"
    "e 0 2\n"
    "e 0 3\n"
    "e 4 5\n"
    "e 4 6\n"
    "e 4 7\n";

// kFig1DecBuilt without the edge from the C-root to its D-child: the C-root
// no longer covers its neighbor D, so the strategy can get stuck.
inline const char* kFig1DecBroken =
    "n 0 C\n"
    "n 1 A\n"
    "n 2 B\n"
    "n 3 D\n"
    "n 4 D\n"
    "n 5 C\n"
    "n 6 E\n"
    "n 7 F\n"
    "e 0 1\n"
    "e 0 2\n"
    "e 4 5\n"
    "e 4 6\n"
    "e 4 7\n";

// Ten vertices: a bidirected 6-cycle E,F,G,H,I,J with pendant paths
// A -> B -> E and C -> D -> G; depth 4.
inline const char* kFig2Dg =
    "e A B\n"
    "e B E\n"
    "e C D\n"
    "e D G\n"
    "e E F\n"
    "e F E\n"
    "e F G\n"
    "e G F\n"
    "e G H\n"
    "e H G\n"
    "e H I\n"
    "e I H\n"
    "e I J\n"
    "e J I\n"
    "e E J\n"
    "e J E\n";

// One copy per vertex, rooted at the copy of E; depth 4 (e, g, d, c).
inline const char* kFig2Dec =
    "n a A\n"
    "n b B\n"
    "n c C\n"
    "n d D\n"
    "n e E\n"
    "n f F\n"
    "n g G\n"
    "n h H\n"
    "n i I\n"
    "n j J\n"
    "e e g\n"
    "e e b\n"
    "e b a\n"
    "e g f\n"
    "e g i\n"
    "e g d\n"
    "e d c\n"
    "e i j\n"
    "e i h\n";

}  // namespace fixtures
