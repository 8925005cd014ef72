import logging
import time

log = logging.getLogger("xlaguerre")


class Timer:
    """
    Step timings of a computation, logged at debug level.

    ```
    timer = Timer("wronskian-first", diagram="((∅|3,2), (1,0|∅))")
    timer.mark("determinant")
    timer.stop()
    ```
    """

    def __init__(self, name: str, diagram: str | None = None) -> None:
        self.label = f"{name} {diagram}" if diagram else name
        self.steps = [time.perf_counter()]
        self.durations: dict[str, float] = {}

    def mark(self, step: str) -> None:
        t_mark = time.perf_counter()
        self.durations[step] = self.durations.get(step, 0.0) + t_mark - self.steps[-1]
        self.steps.append(t_mark)
        log.debug(f"[{self.label}] {step} done in {t_mark - self.steps[-2]:0.4f}s")

    def stop(self) -> float:
        total = time.perf_counter() - self.steps[0]
        slowest = max(self.durations, key=self.durations.get, default=None)
        suffix = f", slowest step {slowest}" if slowest else ""
        log.debug(f"[{self.label}] total {total:0.4f}s{suffix}")
        return total
