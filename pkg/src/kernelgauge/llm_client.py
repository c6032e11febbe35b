"""Candidate sampling: live chat-completion API, mock corpus, or replay store.

Every backend produces the same shape of result, so everything downstream of
sampling is a pure function of the candidate texts. The mock and replay
backends are bit-deterministic; the live backend talks to an OpenAI-style
``/chat/completions`` endpoint with bounded retries and never sets sampling
parameters for reasoning models (which reject them).
"""

from __future__ import annotations

import json
import os
import re
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from pathlib import Path

import requests

from .errors import BackendError, KernelGaugeError, ReplayMissError
from .promptkit import PromptBundle, PromptMode


@dataclass(frozen=True)
class ModelProfile:
    name: str                 # short key used in configs, reports, and paths
    model_id: str             # provider model identifier
    context_window: int
    max_output_tokens: int
    price_in: float           # USD per 1M input tokens
    price_out: float          # USD per 1M output tokens
    reasoning: bool

    def __post_init__(self):
        if min(self.context_window, self.max_output_tokens) <= 0:
            raise KernelGaugeError("token limits must be positive")
        if min(self.price_in, self.price_out) <= 0:
            raise KernelGaugeError("prices must be positive")

    def cost_usd(self, tokens_in: int, tokens_out: int) -> float:
        return tokens_in * self.price_in / 1e6 + tokens_out * self.price_out / 1e6


PROFILES = {
    "gpt-4.1": ModelProfile(
        name="gpt-4.1", model_id="gpt-4.1-2025-04-14",
        context_window=1_047_576, max_output_tokens=32_768,
        price_in=2.00, price_out=8.00, reasoning=False,
    ),
    "o4-mini": ModelProfile(
        name="o4-mini", model_id="o4-mini-2025-04-16",
        context_window=200_000, max_output_tokens=100_000,
        price_in=1.10, price_out=4.40, reasoning=True,
    ),
}


@dataclass
class SamplingConfig:
    n_samples: int = 10
    temperature: float = 1.0
    top_p: float = 1.0
    send_sampling_params: bool = True
    salvage_fences: bool = False   # strip markdown fences models emit anyway
    max_in_flight: int = 1
    retries: int = 3

    def __post_init__(self):
        if self.n_samples < 1:
            raise KernelGaugeError("n_samples must be >= 1")


@dataclass
class KernelCandidate:
    routine: str
    mode: PromptMode
    model: str
    sample_index: int
    source: str
    lang: str = "c"               # "c" or "python" (mock corpora may be Python)
    tokens_in: int = 0
    tokens_out: int = 0
    reasoning_tokens: int | None = None
    cost_usd: float = 0.0
    failure: str | None = None
    salvaged: bool = False

    @property
    def key(self) -> tuple:
        return (self.routine, self.mode.value, self.model, self.sample_index)


_FENCE_RE = re.compile(r"^\s*```[a-zA-Z0-9_+-]*\s*\n(.*)\n\s*```\s*$", re.DOTALL)


def strip_markdown_fences(text: str) -> tuple[str, bool]:
    """Remove one wrapping code fence if present; returns (text, changed)."""
    match = _FENCE_RE.match(text)
    if match:
        return match.group(1), True
    return text, False


class Backend:
    """One sampling source; fetch() returns raw candidate material."""

    deterministic = False

    def fetch(self, bundle: PromptBundle, profile: ModelProfile,
              cfg: SamplingConfig, index: int) -> dict:
        raise NotImplementedError


class MockBackend(Backend):
    """Serves checked-in candidate files for a routine, cycling in name order.

    Corpus layout: ``<root>/<routine>/*.py`` or ``*.c``. Token counts are
    derived from text lengths (about four characters per token), so cost
    accounting stays deterministic.
    """

    deterministic = True

    def __init__(self, root: str):
        self.root = Path(root)
        if not self.root.is_dir():
            raise KernelGaugeError(f"mock corpus directory {root!r} not found")

    def entries(self, routine: str) -> list[Path]:
        rdir = self.root / routine
        files = sorted(p for p in rdir.glob("*") if p.suffix in (".py", ".c"))
        if not files:
            raise KernelGaugeError(f"mock corpus has no entries for {routine}")
        return files

    def fetch(self, bundle, profile, cfg, index):
        files = self.entries(bundle.routine)
        path = files[index % len(files)]
        source = path.read_text("utf-8")
        return {
            "source": source,
            "lang": "python" if path.suffix == ".py" else "c",
            "tokens_in": len(bundle.text) // 4,
            "tokens_out": len(source) // 4,
            "reasoning_tokens": None,
        }


class ReplayBackend(Backend):
    """Serves candidates previously saved with :func:`save_to_store`."""

    deterministic = True

    def __init__(self, root: str):
        self.root = Path(root)
        if not self.root.is_dir():
            raise KernelGaugeError(f"replay store directory {root!r} not found")

    def fetch(self, bundle, profile, cfg, index):
        base = self.root / bundle.routine / bundle.mode.value / profile.name
        meta_path = base / f"{index:03d}.json"
        if not meta_path.exists():
            raise ReplayMissError(
                f"replay store has no entry for "
                f"{bundle.routine}/{bundle.mode.value}/{profile.name}/{index:03d}")
        meta = json.loads(meta_path.read_text("utf-8"))
        src_path = base / f"{index:03d}.{meta.get('ext', 'c')}"
        return {
            "source": src_path.read_text("utf-8"),
            "lang": meta.get("lang", "c"),
            "tokens_in": int(meta.get("tokens_in", 0)),
            "tokens_out": int(meta.get("tokens_out", 0)),
            "reasoning_tokens": meta.get("reasoning_tokens"),
        }


class LiveBackend(Backend):
    """OpenAI-style chat completions over HTTPS, one request per sample."""

    def __init__(self, base_url: str | None = None, api_key_env: str = "OPENAI_API_KEY",
                 timeout_s: float = 600.0):
        self.base_url = (base_url or os.environ.get("OPENAI_BASE_URL")
                         or "https://api.openai.com/v1").rstrip("/")
        self.api_key_env = api_key_env
        self.timeout_s = timeout_s

    def _headers(self) -> dict:
        key = os.environ.get(self.api_key_env)
        if not key:
            raise BackendError(
                f"no API key: set the {self.api_key_env} environment variable")
        return {"Authorization": f"Bearer {key}",
                "Content-Type": "application/json"}

    def fetch(self, bundle, profile, cfg, index):
        body = {
            "model": profile.model_id,
            "messages": [{"role": "user", "content": bundle.text}],
        }
        if cfg.send_sampling_params and not profile.reasoning:
            body["temperature"] = cfg.temperature
            body["top_p"] = cfg.top_p
        delay = 1.0
        last_error = "no attempt made"
        for attempt in range(cfg.retries + 1):
            try:
                response = requests.post(f"{self.base_url}/chat/completions",
                                         headers=self._headers(), json=body,
                                         timeout=self.timeout_s)
            except requests.RequestException as exc:
                last_error = f"transport error: {exc}"
            else:
                if response.status_code in (401, 403):
                    raise BackendError(
                        f"authentication/permission failure: {response.text[:500]}")
                if response.status_code == 200:
                    return self._parse(response.json())
                last_error = f"HTTP {response.status_code}: {response.text[:300]}"
                if response.status_code not in (408, 429) and response.status_code < 500:
                    break
            if attempt < cfg.retries:
                time.sleep(delay)
                delay *= 2
        raise RuntimeError(last_error)

    @staticmethod
    def _parse(payload: dict) -> dict:
        try:
            source = payload["choices"][0]["message"]["content"] or ""
        except (KeyError, IndexError, TypeError):
            raise BackendError(f"malformed completion payload: {str(payload)[:300]}")
        usage = payload.get("usage", {}) or {}
        details = usage.get("completion_tokens_details", {}) or {}
        return {
            "source": source,
            "lang": "c",
            "tokens_in": int(usage.get("prompt_tokens", 0)),
            "tokens_out": int(usage.get("completion_tokens", 0)),
            "reasoning_tokens": details.get("reasoning_tokens"),
        }


def sample_candidates(bundle: PromptBundle, profile: ModelProfile,
                      cfg: SamplingConfig, backend: Backend) -> list[KernelCandidate]:
    """Exactly cfg.n_samples candidates, ordered by sample index.

    Per-sample hard failures (after retries) become candidates with empty
    source and a failure tag; authentication failures abort the run.
    """
    def one(index: int) -> KernelCandidate:
        try:
            raw = backend.fetch(bundle, profile, cfg, index)
        except (BackendError, ReplayMissError):
            raise
        except Exception as exc:
            return KernelCandidate(
                routine=bundle.routine, mode=bundle.mode, model=profile.name,
                sample_index=index, source="", failure=str(exc))
        source = raw["source"]
        salvaged = False
        if cfg.salvage_fences:
            source, salvaged = strip_markdown_fences(source)
        tokens_in = raw["tokens_in"]
        tokens_out = raw["tokens_out"]
        return KernelCandidate(
            routine=bundle.routine, mode=bundle.mode, model=profile.name,
            sample_index=index, source=source, lang=raw.get("lang", "c"),
            tokens_in=tokens_in, tokens_out=tokens_out,
            reasoning_tokens=raw.get("reasoning_tokens"),
            cost_usd=profile.cost_usd(tokens_in, tokens_out),
            failure=None if source.strip() else (raw.get("failure") or "empty completion"),
            salvaged=salvaged,
        )

    indices = range(cfg.n_samples)
    if cfg.max_in_flight > 1 and not backend.deterministic:
        with ThreadPoolExecutor(max_workers=cfg.max_in_flight) as pool:
            return list(pool.map(one, indices))
    return [one(i) for i in indices]


def save_to_store(store_root: str, candidate: KernelCandidate) -> None:
    """Persist one candidate as source file + metadata sidecar."""
    ext = "py" if candidate.lang == "python" else "c"
    base = Path(store_root) / candidate.routine / candidate.mode.value / candidate.model
    base.mkdir(parents=True, exist_ok=True)
    (base / f"{candidate.sample_index:03d}.{ext}").write_text(candidate.source, "utf-8")
    meta = {
        "ext": ext,
        "lang": candidate.lang,
        "tokens_in": candidate.tokens_in,
        "tokens_out": candidate.tokens_out,
        "reasoning_tokens": candidate.reasoning_tokens,
        "cost_usd": candidate.cost_usd,
        "failure": candidate.failure,
        "salvaged": candidate.salvaged,
    }
    (base / f"{candidate.sample_index:03d}.json").write_text(
        json.dumps(meta, indent=1, sort_keys=True), "utf-8")


def make_backend(spec: str) -> Backend:
    """Parse a backend spec: ``live``, ``mock:<dir>``, or ``replay:<dir>``."""
    if spec == "live":
        return LiveBackend()
    kind, _, path = spec.partition(":")
    if kind == "mock" and path:
        return MockBackend(path)
    if kind == "replay" and path:
        return ReplayBackend(path)
    raise KernelGaugeError(
        f"bad backend spec {spec!r} (expected live, mock:<dir>, replay:<dir>)")
