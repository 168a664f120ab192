// Hand-coded localization data used by tests and the verification suite.
//
// S3 acts on P^2 by permuting homogeneous coordinates. The element order is
// id, t01, t02, t12, c = (0 1 2), c2 = (0 2 1), composed as functions, and
// the table entry mul[i][j] is elements[i] o elements[j].
//
// Each transposition is linearly diagonalizable with eigenvalues (1, 1, -1),
// so it fixes a line (tangent roots x, one normal direction rotated by a
// half turn) and an isolated point (two normal directions rotated by a half
// turn). A 3-cycle has eigenvalues (1, w, w^2), w = e^{2 pi i/3}: three
// isolated points, each with normal rotations of 1/3 and 2/3 of a turn.
#ifndef EQCLASS_FIXTURES_HPP
#define EQCLASS_FIXTURES_HPP

#include "eqclass/serialize.hpp"

namespace eqclass {
namespace fixtures {

inline const char* s3_on_p2_json() {
    return R"JSON({
  "conductor": 6,
  "group": {
    "elements": ["id", "t01", "t02", "t12", "c", "c2"],
    "order": 6,
    "mul": [
      [0, 1, 2, 3, 4, 5],
      [1, 0, 5, 4, 3, 2],
      [2, 4, 0, 5, 1, 3],
      [3, 5, 4, 0, 2, 1],
      [4, 2, 3, 1, 5, 0],
      [5, 3, 1, 2, 0, 4]
    ]
  },
  "fixed_data": {
    "id": [
      {
        "label": "P2",
        "ring": {"vars": ["x"], "caps": [2], "total_cap": 2, "integral": [[[2], "1"]]},
        "tangent": {"terms": [
          {"root": [[[1], "1"]], "angle": "0", "hodge": 0, "mult": 3},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": []}
      }
    ],
    "t01": [
      {
        "label": "line",
        "ring": {"vars": ["x"], "caps": [1], "total_cap": 1, "integral": [[[1], "1"]]},
        "tangent": {"terms": [
          {"root": [[[1], "1"]], "angle": "0", "hodge": 0, "mult": 2},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [[[1], "1"]], "angle": "1/2", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "pt",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/2", "hodge": 0, "mult": 2}
        ]}
      }
    ],
    "t02": [
      {
        "label": "line",
        "ring": {"vars": ["x"], "caps": [1], "total_cap": 1, "integral": [[[1], "1"]]},
        "tangent": {"terms": [
          {"root": [[[1], "1"]], "angle": "0", "hodge": 0, "mult": 2},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [[[1], "1"]], "angle": "1/2", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "pt",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/2", "hodge": 0, "mult": 2}
        ]}
      }
    ],
    "t12": [
      {
        "label": "line",
        "ring": {"vars": ["x"], "caps": [1], "total_cap": 1, "integral": [[[1], "1"]]},
        "tangent": {"terms": [
          {"root": [[[1], "1"]], "angle": "0", "hodge": 0, "mult": 2},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [[[1], "1"]], "angle": "1/2", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "pt",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/2", "hodge": 0, "mult": 2}
        ]}
      }
    ],
    "c": [
      {
        "label": "p0",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/3", "hodge": 0, "mult": 1},
          {"root": [], "angle": "2/3", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "p1",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/3", "hodge": 0, "mult": 1},
          {"root": [], "angle": "2/3", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "p2",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/3", "hodge": 0, "mult": 1},
          {"root": [], "angle": "2/3", "hodge": 0, "mult": 1}
        ]}
      }
    ],
    "c2": [
      {
        "label": "p0",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/3", "hodge": 0, "mult": 1},
          {"root": [], "angle": "2/3", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "p1",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/3", "hodge": 0, "mult": 1},
          {"root": [], "angle": "2/3", "hodge": 0, "mult": 1}
        ]}
      },
      {
        "label": "p2",
        "ring": {"vars": ["x"], "caps": [0], "total_cap": 0, "integral": [[[0], "1"]]},
        "tangent": {"terms": [
          {"root": [], "angle": "0", "hodge": 0, "mult": 1},
          {"root": [], "angle": "0", "hodge": 0, "mult": -1}
        ]},
        "normal": {"terms": [
          {"root": [], "angle": "1/3", "hodge": 0, "mult": 1},
          {"root": [], "angle": "2/3", "hodge": 0, "mult": 1}
        ]}
      }
    ]
  }
})JSON";
}

inline LocalizationDatum s3_on_p2() {
    return js::datum_from_json(Json::parse(s3_on_p2_json()));
}

} // namespace fixtures
} // namespace eqclass

#endif
