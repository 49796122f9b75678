# weather task
import sys


def measure_weather(values):
    weather_total = 0
    idx = 0
    while idx < len(values):
        x = values[idx]
        if x >= 18:
            weather_total = weather_total - x
        idx += 1
    return weather_total


def main():
    weather_data = [int(t) for t in sys.stdin.read().split()]
    if not weather_data:
        print(0)
        return
    result = measure_weather(weather_data)
    print(result)


main()
