"""Request and response models for the HTTP service."""

from pydantic import BaseModel


class HealthResponse(BaseModel):
    status: str


class TableRow(BaseModel):
    n: int
    back_degree: int
    forward_degree: int
    size: int
    max_degree_set: list[int]
    domination_number: int
    diameter: int
    max_degree: int


class TableResponse(BaseModel):
    max_n: int
    rows: list[TableRow]


class GraphResponse(BaseModel):
    n: int
    size: int
    # lo[i-1]..hi[i-1] is the closed neighborhood span of vertex i
    lo: list[int]
    hi: list[int]
    # omitted above the edge list size cap
    edges: list[tuple[int, int]] | None = None


class DomPathResponse(BaseModel):
    n: int
    kind: str
    vertices: list[int]
    gamma_set: list[int]


class SequenceResponse(BaseModel):
    id: str
    start: int
    count: int
    prepend_artificial: bool
    terms: list[int]


class CheckRequest(BaseModel):
    conjectures: list[str] | None = None
    max_n: int = 10000
    c7_terms: int = 4


class ReportModel(BaseModel):
    id: str
    variable: str
    range: tuple[int, int]
    status: str
    witness: tuple[int, int, int] | None = None
    margin: int
    offset: int
    metadata: dict


class CheckResponse(BaseModel):
    max_n: int
    c7_terms: int
    all_verified: bool
    reports: list[ReportModel]
