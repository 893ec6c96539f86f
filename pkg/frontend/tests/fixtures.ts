// Recorded responses from the HTTP service for the two-level chain
// document (hash 03fc29634f34e33d).  Regenerate by re-running the requests in the
// repository README against a live server.

import type {
  CurvePayload,
  Frame,
  MotionResponse,
  SpaceReport,
  UploadResponse,
} from "../src/types.js";

export const uploadResponse: UploadResponse = {
  "check": {
    "failingStep": null,
    "lastLevel": [
      5
    ],
    "lowCayleyComplexity": true,
    "onePath": true,
    "steps": [
      {
        "base": [
          1,
          3
        ],
        "index": 1,
        "vertex": 2
      },
      {
        "base": [
          1,
          3
        ],
        "index": 2,
        "vertex": 4
      },
      {
        "base": [
          2,
          4
        ],
        "index": 3,
        "vertex": 5
      }
    ],
    "treeDecomposable": true
  },
  "hash": "03fc29634f34e33d"
};

export const spaceReport: SpaceReport = {
  "algorithm": "elr",
  "base": [
    1,
    3
  ],
  "diagnostics": {
    "deadEndCandidates": [
      0.2,
      7.0,
      9.0,
      16.0
    ],
    "fourCycles": [
      {
        "from": [
          1,
          3
        ],
        "kind": "DiagonalHop",
        "to": [
          2,
          4
        ]
      }
    ]
  },
  "schemaVersion": 1,
  "timingSeconds": 0.0019169219995092135,
  "types": [
    {
      "adjacency": [],
      "endpoints": [],
      "intervals": [],
      "sigma": "---"
    },
    {
      "adjacency": [],
      "endpoints": [],
      "intervals": [],
      "sigma": "--+"
    },
    {
      "adjacency": [
        {
          "hi": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "-++"
          },
          "lo": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "-++"
          }
        },
        {
          "hi": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "-++"
          },
          "lo": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "-++"
          }
        }
      ],
      "endpoints": [
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 7.000000004140518
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 7.490864417701545
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 7.5133419498969625
        },
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 8.52363714225498
        }
      ],
      "intervals": [
        [
          7.000000004140518,
          7.490864417701545
        ],
        [
          7.5133419498969625,
          8.52363714225498
        ]
      ],
      "sigma": "-+-"
    },
    {
      "adjacency": [
        {
          "hi": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "-+-"
          },
          "lo": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "-+-"
          }
        },
        {
          "hi": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "-+-"
          },
          "lo": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "-+-"
          }
        }
      ],
      "endpoints": [
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 7.000000004140518
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 7.490864417701545
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 7.5133419498969625
        },
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "-+0",
          "value": 8.52363714225498
        }
      ],
      "intervals": [
        [
          7.000000004140518,
          7.490864417701545
        ],
        [
          7.5133419498969625,
          8.52363714225498
        ]
      ],
      "sigma": "-++"
    },
    {
      "adjacency": [
        {
          "hi": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "+-+"
          },
          "lo": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "+-+"
          }
        },
        {
          "hi": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "+-+"
          },
          "lo": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "+-+"
          }
        }
      ],
      "endpoints": [
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 7.000000004140518
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 7.490864417701545
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 7.5133419498969625
        },
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 8.52363714225498
        }
      ],
      "intervals": [
        [
          7.000000004140518,
          7.490864417701545
        ],
        [
          7.5133419498969625,
          8.52363714225498
        ]
      ],
      "sigma": "+--"
    },
    {
      "adjacency": [
        {
          "hi": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "+--"
          },
          "lo": {
            "interval": [
              7.000000004140518,
              7.490864417701545
            ],
            "sigma": "+--"
          }
        },
        {
          "hi": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "+--"
          },
          "lo": {
            "interval": [
              7.5133419498969625,
              8.52363714225498
            ],
            "sigma": "+--"
          }
        }
      ],
      "endpoints": [
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 7.000000004140518
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 7.490864417701545
        },
        {
          "ends": [
            "max"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 7.5133419498969625
        },
        {
          "ends": [
            "min"
          ],
          "kind": "candidate",
          "steps": [
            3
          ],
          "type": "+-0",
          "value": 8.52363714225498
        }
      ],
      "intervals": [
        [
          7.000000004140518,
          7.490864417701545
        ],
        [
          7.5133419498969625,
          8.52363714225498
        ]
      ],
      "sigma": "+-+"
    },
    {
      "adjacency": [],
      "endpoints": [],
      "intervals": [],
      "sigma": "++-"
    },
    {
      "adjacency": [],
      "endpoints": [],
      "intervals": [],
      "sigma": "+++"
    }
  ],
  "union": [
    [
      7.000000004140518,
      7.490864417701545
    ],
    [
      7.5133419498969625,
      8.52363714225498
    ]
  ]
};

export const motionResponse: MotionResponse = {
  "continuityBound": 0.15451630267763156,
  "frames": [
    {
      "baseLength": 7.2,
      "forwardType": "-+-",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.3777777777777778,
          -7.141471646933188
        ],
        "3": [
          7.2,
          0.0
        ],
        "4": [
          -0.7749999999999997,
          0.6319612329882273
        ],
        "5": [
          3.463640870754359,
          -6.887574892572886
        ]
      }
    },
    {
      "baseLength": 7.296954805900515,
      "forwardType": "-+-",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.4292078524925516,
          -7.116918820978881
        ],
        "3": [
          7.296954805900515,
          0.0
        ],
        "4": [
          -0.6683918716858208,
          0.7438093209044407
        ],
        "5": [
          3.437502742246033,
          -6.849024760921219
        ]
      }
    },
    {
      "baseLength": 7.39390961180103,
      "forwardType": "-+-",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.4805604916602757,
          -7.091946042088418
        ],
        "3": [
          7.39390961180103,
          0.0
        ],
        "4": [
          -0.563308255704202,
          0.8262468209049215
        ],
        "5": [
          3.4225676215405914,
          -6.830272849679486
        ]
      }
    },
    {
      "baseLength": 7.490864409069656,
      "forwardType": "-+-",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.531838697480718,
          -7.066549045678357
        ],
        "3": [
          7.490864409069656,
          0.0
        ],
        "4": [
          -0.4596899655929598,
          0.8880794646500635
        ],
        "5": [
          3.4116406463162927,
          -6.826990157080011
        ]
      }
    },
    {
      "baseLength": 7.490864409069656,
      "forwardType": "-++",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.531838697480718,
          -7.066549045678357
        ],
        "3": [
          7.490864409069656,
          0.0
        ],
        "4": [
          -0.4596899655929598,
          0.8880794646500635
        ],
        "5": [
          3.411625516923688,
          -6.826997748811562
        ]
      }
    },
    {
      "baseLength": 7.427242945134363,
      "forwardType": "-++",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.49819833213414,
          -7.083262555422743
        ],
        "3": [
          7.427242945134363,
          0.0
        ],
        "4": [
          -0.5275216047083316,
          0.849541615558618
        ],
        "5": [
          3.337773788058302,
          -6.868553453919662
        ]
      }
    },
    {
      "baseLength": 7.363621472567181,
      "forwardType": "-++",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.464526346264261,
          -7.099792757259948
        ],
        "3": [
          7.363621472567181,
          0.0
        ],
        "4": [
          -0.5959756922219676,
          0.8030024746416082
        ],
        "5": [
          3.271210173109561,
          -6.914145538570782
        ]
      }
    },
    {
      "baseLength": 7.3,
      "forwardType": "-++",
      "positions": {
        "1": [
          0.0,
          0.0
        ],
        "2": [
          3.4308219178082195,
          -7.116140876084926
        ],
        "3": [
          7.3,
          0.0
        ],
        "4": [
          -0.6650684931506851,
          0.7467823641585795
        ],
        "5": [
          3.2077740025351598,
          -6.967528426732448
        ]
      }
    }
  ],
  "paths": [
    {
      "case": "cross-interval",
      "legs": [
        {
          "direction": "up",
          "interval": [
            7.000000004140518,
            7.490864417701545
          ],
          "sigma": "-+-"
        },
        {
          "direction": "down",
          "interval": [
            7.000000004140518,
            7.490864417701545
          ],
          "sigma": "-++"
        }
      ],
      "lfStart": 7.2,
      "lfTarget": 7.3,
      "transitions": [
        {
          "flippedStep": 3,
          "lf": 7.490864417701545
        }
      ]
    },
    {
      "case": "cross-interval",
      "legs": [
        {
          "direction": "down",
          "interval": [
            7.000000004140518,
            7.490864417701545
          ],
          "sigma": "-+-"
        },
        {
          "direction": "up",
          "interval": [
            7.000000004140518,
            7.490864417701545
          ],
          "sigma": "-++"
        }
      ],
      "lfStart": 7.2,
      "lfTarget": 7.3,
      "transitions": [
        {
          "flippedStep": 3,
          "lf": 7.000000004140518
        }
      ]
    }
  ]
};

export const realizeFrame: Frame = {
  "baseLength": 7.2,
  "forwardType": "-+-",
  "positions": {
    "1": [
      0.0,
      0.0
    ],
    "2": [
      3.3777777777777778,
      -7.141471646933188
    ],
    "3": [
      7.2,
      0.0
    ],
    "4": [
      -0.7749999999999997,
      0.6319612329882273
    ],
    "5": [
      3.463640870754359,
      -6.887574892572886
    ]
  }
};

export const curvePayload: CurvePayload = {
  "nonEdges": [
    [
      1,
      3
    ],
    [
      1,
      5
    ]
  ],
  "points": [
    {
      "component": 0,
      "distances": [
        7.000000012772407,
        8.165797388746793
      ],
      "sigma": "-+-"
    },
    {
      "component": 0,
      "distances": [
        7.245432210921031,
        7.684254122683875
      ],
      "sigma": "-+-"
    },
    {
      "component": 0,
      "distances": [
        7.490864409069656,
        7.63197788941142
      ],
      "sigma": "-+-"
    },
    {
      "component": 0,
      "distances": [
        7.000000012772407,
        8.167042781282927
      ],
      "sigma": "-++"
    },
    {
      "component": 0,
      "distances": [
        7.245432210921031,
        7.6980032421036615
      ],
      "sigma": "-++"
    },
    {
      "component": 0,
      "distances": [
        7.490864409069656,
        7.631977917290049
      ],
      "sigma": "-++"
    },
    {
      "component": 1,
      "distances": [
        7.5133419585288514,
        7.6319779171804
      ],
      "sigma": "-+-"
    },
    {
      "component": 1,
      "distances": [
        8.01848954607597,
        7.796129224183527
      ],
      "sigma": "-+-"
    },
    {
      "component": 1,
      "distances": [
        8.523637133623092,
        8.166490169977152
      ],
      "sigma": "-+-"
    },
    {
      "component": 1,
      "distances": [
        7.5133419585288514,
        7.631977889516801
      ],
      "sigma": "-++"
    },
    {
      "component": 1,
      "distances": [
        8.01848954607597,
        7.7656577021366315
      ],
      "sigma": "-++"
    },
    {
      "component": 1,
      "distances": [
        8.523637133623092,
        8.166475332085723
      ],
      "sigma": "-++"
    },
    {
      "component": 2,
      "distances": [
        7.000000012772407,
        8.167042781282927
      ],
      "sigma": "+--"
    },
    {
      "component": 2,
      "distances": [
        7.245432210921031,
        7.6980032421036615
      ],
      "sigma": "+--"
    },
    {
      "component": 2,
      "distances": [
        7.490864409069656,
        7.631977917290049
      ],
      "sigma": "+--"
    },
    {
      "component": 2,
      "distances": [
        7.000000012772407,
        8.165797388746793
      ],
      "sigma": "+-+"
    },
    {
      "component": 2,
      "distances": [
        7.245432210921031,
        7.684254122683875
      ],
      "sigma": "+-+"
    },
    {
      "component": 2,
      "distances": [
        7.490864409069656,
        7.63197788941142
      ],
      "sigma": "+-+"
    },
    {
      "component": 3,
      "distances": [
        7.5133419585288514,
        7.631977889516801
      ],
      "sigma": "+--"
    },
    {
      "component": 3,
      "distances": [
        8.01848954607597,
        7.7656577021366315
      ],
      "sigma": "+--"
    },
    {
      "component": 3,
      "distances": [
        8.523637133623092,
        8.166475332085723
      ],
      "sigma": "+--"
    },
    {
      "component": 3,
      "distances": [
        7.5133419585288514,
        7.6319779171804
      ],
      "sigma": "+-+"
    },
    {
      "component": 3,
      "distances": [
        8.01848954607597,
        7.796129224183527
      ],
      "sigma": "+-+"
    },
    {
      "component": 3,
      "distances": [
        8.523637133623092,
        8.166490169977152
      ],
      "sigma": "+-+"
    }
  ],
  "schemaVersion": 1
};

