#!/usr/bin/env python3
"""
성능 모니터링 및 로깅 시스템
횡단선 계산/검증 작업의 소요 시간을 추적
"""

import time
import logging
import functools
from datetime import datetime
from collections import defaultdict, deque
import threading

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'


def configure_logging(level='WARNING'):
    """진입점에서 한 번 호출하는 로깅 설정 (stderr)"""
    logging.basicConfig(level=getattr(logging, str(level).upper(), logging.WARNING), format=LOG_FORMAT)


class PerformanceMonitor:
    """성능 모니터링 클래스"""

    def __init__(self):
        self.metrics = defaultdict(lambda: {
            'count': 0,
            'total_time': 0.0,
            'min_time': float('inf'),
            'max_time': 0.0,
            'recent_times': deque(maxlen=100)
        })
        self.lock = threading.Lock()

    def monitor(self, operation_name):
        """함수 성능 모니터링 데코레이터"""
        def decorator(func):
            @functools.wraps(func)
            def wrapper(*args, **kwargs):
                start_time = time.perf_counter()
                try:
                    return func(*args, **kwargs)
                finally:
                    self.record_metric(operation_name, time.perf_counter() - start_time)
            return wrapper
        return decorator

    def record_metric(self, operation_name, execution_time):
        """성능 메트릭 기록"""
        with self.lock:
            metric = self.metrics[operation_name]
            metric['count'] += 1
            metric['total_time'] += execution_time
            metric['min_time'] = min(metric['min_time'], execution_time)
            metric['max_time'] = max(metric['max_time'], execution_time)
            metric['recent_times'].append(execution_time)

    def get_metrics(self, operation_name=None):
        """성능 메트릭 조회"""
        with self.lock:
            names = [operation_name] if operation_name else list(self.metrics.keys())
            result = {}
            for name in names:
                if name not in self.metrics:
                    continue
                metric = self.metrics[name]
                result[name] = {
                    'operation': name,
                    'count': metric['count'],
                    'avg_time': metric['total_time'] / metric['count'] if metric['count'] else 0,
                    'min_time': metric['min_time'] if metric['min_time'] != float('inf') else 0,
                    'max_time': metric['max_time'],
                    'total_time': metric['total_time'],
                }
        if operation_name:
            return result.get(operation_name)
        return result

    def get_slow_operations(self, threshold=1.0):
        """느린 작업 식별 (threshold 초 이상)"""
        slow_ops = [
            {'operation': name, 'avg_time': metric['avg_time'], 'count': metric['count']}
            for name, metric in self.get_metrics().items()
            if metric['avg_time'] > threshold
        ]
        return sorted(slow_ops, key=lambda x: x['avg_time'], reverse=True)

    def generate_report(self):
        """성능 리포트 생성"""
        detailed = self.get_metrics()
        total_operations = sum(m['count'] for m in detailed.values())
        total_time = sum(m['total_time'] for m in detailed.values())
        return {
            'timestamp': datetime.now().isoformat(),
            'summary': {
                'total_operations': total_operations,
                'total_time': total_time,
                'unique_operations': len(detailed)
            },
            'slow_operations': self.get_slow_operations(),
            'detailed_metrics': detailed
        }

    def log_performance_report(self):
        """성능 리포트를 로그에 기록"""
        report = self.generate_report()

        logger.warning("=== 성능 모니터링 리포트 ===")
        logger.warning(f"전체 작업 수: {report['summary']['total_operations']}")
        logger.warning(f"전체 실행 시간: {report['summary']['total_time']:.3f}초")
        for op_name, metric in report['detailed_metrics'].items():
            logger.warning(
                f"{op_name}: {metric['count']}회, 평균 {metric['avg_time']:.4f}초 "
                f"(최소: {metric['min_time']:.4f}, 최대: {metric['max_time']:.4f})"
            )
        for op in report['slow_operations']:
            logger.warning(f"느린 작업 {op['operation']}: 평균 {op['avg_time']:.4f}초")

    def reset(self):
        with self.lock:
            self.metrics.clear()


# 전역 성능 모니터 인스턴스
performance_monitor = PerformanceMonitor()


def monitor_performance(operation_name):
    """성능 모니터링 데코레이터"""
    return performance_monitor.monitor(operation_name)


def get_performance_metrics(operation_name=None):
    """성능 메트릭 조회"""
    return performance_monitor.get_metrics(operation_name)


def log_performance_report():
    """성능 리포트를 로그에 기록"""
    performance_monitor.log_performance_report()
